import pytest
from click.testing import CliRunner

from gtspace.cli import cli, main


@pytest.fixture
def run(clean_env):
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(cli, ['--env-file', str(clean_env), *map(str, args)])
    return invoke


def result_lines(result, prefix):
    return [line for line in result.output.splitlines() if line.startswith(prefix)]


def test_classify(run, spaces_dir):
    result = run('classify', spaces_dir / 'E1.space')
    assert result.exit_code == 0
    assert 'axiom T1 true' in result_lines(result, 'axiom ')
    assert result.output.startswith('# axioms of E1')


def test_families(run, spaces_dir):
    result = run('families', spaces_dir / 'E1.space', '--kind', 'sλ-closed', '--machine')
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert {'{a}', '{b}', '{c}', '{d}'} <= set(lines)
    assert '{a,c}' not in lines

    alias = run('families', spaces_dir / 'E1.space', '--kind', 's-lambda-closed', '--machine')
    assert alias.output == result.output


def test_families_unknown_kind(run, spaces_dir):
    result = run('families', spaces_dir / 'E1.space', '--kind', 'clopen')
    assert result.exit_code == 1
    assert "unknown family kind 'clopen'" in result.output


def test_enumerate(run):
    assert len(result_lines(run('enumerate', '--n', 2), 'space ')) == 7
    assert len(result_lines(run('enumerate', '--n', 2, '--dedup'), 'space ')) == 5


def test_enumerate_too_large(run):
    result = run('enumerate', '--n', 5)
    assert result.exit_code == 1
    assert 'exceeds' in result.output


def test_verify_is_deterministic(run, spaces_dir):
    first = run('verify', spaces_dir / 'E0.space', '--machine')
    second = run('verify', spaces_dir / 'E0.space', '--machine')
    assert first.exit_code == 0
    assert first.output == second.output
    assert all(line.split()[-1] in ('verified', 'vacuous') for line in result_lines(first, 'theorem '))


def test_verify_needs_one_source(run, spaces_dir):
    assert run('verify').exit_code == 1
    assert run('verify', spaces_dir / 'E0.space', '--n', 2).exit_code == 1


def test_mine(run):
    result = run('mine', '--property', 'sgλ-closed-not-sλ-closed', '--n', 3, '--limit', 1)
    assert result.exit_code == 0
    assert 'set D {a}' in result.output
    assert 'space W1' in result.output


def test_mine_unknown_property(run):
    result = run('mine', '--property', 'nonsense', '--n', 2)
    assert result.exit_code == 1
    assert 'unknown property' in result.output


def test_urysohn(run, tmp_path):
    space_file = tmp_path / 'D2.space'
    space_file.write_text("space D2\npoints a b\nopen a\nopen b\nopen a b\n", encoding='utf-8')
    result = run('urysohn', space_file, '--a', 'a', '--b', 'b', '--depth', 1)
    assert result.exit_code == 0
    assert 'V 1/2^1 {a}' in result.output
    assert 'f b 1/2^0' in result.output


def test_urysohn_hypothesis_failure(run, spaces_dir):
    result = run('urysohn', spaces_dir / 'E2.space', '--a', 'a', '--b', 'c')
    assert result.exit_code == 1
    assert 'hypothesis' in result.output


def test_missing_space_file(run, tmp_path):
    result = run('classify', tmp_path / 'nope.space')
    assert result.exit_code == 1
    assert 'not found' in result.output


def test_main_returns_status(clean_env, tmp_path):
    assert main(['--env-file', str(clean_env), 'classify', str(tmp_path / 'nope.space')]) == 1
    assert main(['--env-file', str(clean_env), 'enumerate', '--n', '1']) == 0


def test_usage_errors_exit_with_one(clean_env, spaces_dir):
    env = ['--env-file', str(clean_env)]
    assert main([*env, 'verify']) == 1
    assert main([*env, 'families', str(spaces_dir / 'E1.space'), '--kind', 'clopen']) == 1
    assert main([*env, 'classify']) == 1
    assert main([*env, 'enumerate', '--n', '2', '--bogus']) == 1
    assert main([*env, 'no-such-command']) == 1
    assert main(['--bogus']) == 1


def test_failed_theorem_exits_with_two(clean_env, tmp_path):
    # T5, with a subspace that is not T4
    space_file = tmp_path / 'T5.space'
    space_file.write_text("space T5\npoints a b c\nopen a\nopen a b c\n", encoding='utf-8')
    assert main(['--env-file', str(clean_env), 'verify', str(space_file), '--machine']) == 2


def test_undecodable_space_file(run, tmp_path):
    space_file = tmp_path / 'bad.space'
    space_file.write_bytes(b"space X\npoints a \xff\nopen\n")
    result = run('classify', space_file)
    assert result.exit_code == 1
    assert 'line 2' in result.output
    assert 'UTF-8' in result.output


def test_directory_instead_of_space_file(run, tmp_path):
    result = run('classify', tmp_path)
    assert result.exit_code == 1
    assert result.output.startswith('Error: ')


def test_verify_reports_empty_intersections(run, spaces_dir):
    result = run('verify', spaces_dir / 'E0.space')
    assert '# empty-intersection convention: 0' in result.output

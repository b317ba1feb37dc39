import os
from pathlib import Path
from typing import Literal, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

# Variable name -> settings field
ENV_VARIABLES = {
    'GT_SAMPLE_SEED': 'sample_seed',
    'GT_SAMPLE_SIZE': 'sample_size',
    'GT_URYSOHN_DEPTH': 'urysohn_depth',
    'GT_COVER_LIMIT': 'cover_limit',
    'GT_MINE_LIMIT': 'mine_limit',
    'GT_WORKERS': 'workers',
    'GT_LOG_LEVEL': 'log_level',
}


class Settings(BaseModel):
    sample_seed: int = 0
    sample_size: int = Field(default=100_000, ge=1)
    urysohn_depth: int = Field(default=3, ge=1, le=12)
    cover_limit: int = Field(default=8, ge=1, le=16)
    mine_limit: int = Field(default=5, ge=1)
    workers: int = Field(default=1, ge=1)
    log_level: Literal['DEBUG', 'INFO', 'WARNING', 'ERROR'] = 'WARNING'


def load_settings(env_path: Optional[Path] = None) -> Settings:
    """Read GT_* variables (after loading .env) into a validated Settings."""
    # Load environment variables from the .env file, if available
    if env_path is not None:
        load_dotenv(dotenv_path=env_path)
    else:
        load_dotenv()

    values = {}
    for variable, field in ENV_VARIABLES.items():
        raw = os.getenv(variable)
        if raw is not None and raw.strip() != '':
            values[field] = raw.strip().upper() if field == 'log_level' else raw.strip()

    try:
        return Settings(**values)
    except ValidationError as e:
        bad = sorted({str(err['loc'][0]) for err in e.errors()})
        names = [name for name, field in ENV_VARIABLES.items() if field in bad]
        raise ValueError(f"Error: invalid value for {', '.join(names)}: {e.errors()[0]['msg']}") from e

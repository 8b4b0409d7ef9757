"""Runtime configuration: truncation orders and feasibility bounds.

Values come from explicit arguments, then ``LFORGE_*`` environment variables,
then the defaults below.
"""

import os
from dataclasses import asdict, dataclass, fields, replace


@dataclass(frozen=True)
class Config:
    series_order: int = 8
    universal_n_max: int = 6
    universal_nm_max: int = 8
    witt_length: int = 8
    k_max_stability: int = 30
    module_bound: int = 12
    zeta_precision_bits: int = 80

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, int) or value <= 0:
                raise ValueError(f"config field {f.name} must be a positive integer, got {value!r}")

    @classmethod
    def from_env(cls, environ=None, **overrides):
        environ = os.environ if environ is None else environ
        values = {}
        for f in fields(cls):
            key = "LFORGE_" + f.name.upper()
            if key in environ:
                values[f.name] = int(environ[key])
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def to_dict(self):
        return asdict(self)

    def replace(self, **changes):
        return replace(self, **changes)


_current = Config()


def get_config() -> Config:
    return _current


def set_config(config: Config) -> Config:
    """Install ``config`` as the process default and return the previous one."""
    global _current
    previous, _current = _current, config
    return previous

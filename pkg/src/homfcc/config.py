"""Run configuration shared by the CLI subcommands."""
from __future__ import annotations

from dataclasses import dataclass, fields

from .errors import DomainError

# smallest admissible value of each integer parameter
_MINIMUMS = {"s": 1, "k": 1, "t": 1, "rho": 0, "lam": 1, "budget": 1, "r_max": 0, "radius": 0, "t_max": 1}


@dataclass(frozen=True)
class RunConfig:
    command: str
    s: int | None = None
    k: int | None = None
    t: int | None = None
    rho: int | None = None
    lam: int | None = None
    function: str | None = None
    budget: int | None = None
    r_max: int | None = None
    radius: int | None = None
    t_max: int | None = None
    output: str = "human"

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        return cls(**{f.name: getattr(args, f.name, None) for f in fields(cls)
                      if getattr(args, f.name, None) is not None})

    def validate(self) -> "RunConfig":
        for name, low in _MINIMUMS.items():
            v = getattr(self, name)
            if v is not None and v < low:
                flag = "--" + ("lambda" if name == "lam" else name.replace("_", "-"))
                raise DomainError(f"{flag} must be >= {low}, got {v}")
        return self

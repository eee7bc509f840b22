"""Run configuration: plain key=value files, overridable by CLI flags."""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path


@dataclass(frozen=True)
class Config:
    quad_bound: int = 10**8
    cyclic_cubic_bound: int = 10**9  # disc bound
    s3_cubic_bound: int = 10**7  # enumeration cap, |disc|
    c4_bound: int = 10**7  # disc bound
    classgroup_limit: int = 10**6
    census_cubic_bound: int = 10**6  # grid clip for cubic-backed families
    pair_bound: int = 10**7  # grid clip for biquadratic-by-disc families
    out_dir: str = "."
    workers: int = 1
    fit_grid: tuple[int, int] = (8, 18)  # X = 10^(k/2), k in [lo, hi]
    import_path: str = ""

    def __post_init__(self):
        for name in (
            "quad_bound",
            "cyclic_cubic_bound",
            "s3_cubic_bound",
            "c4_bound",
            "classgroup_limit",
            "census_cubic_bound",
            "pair_bound",
        ):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


_INT_KEYS = {
    "quad_bound",
    "cyclic_cubic_bound",
    "s3_cubic_bound",
    "c4_bound",
    "classgroup_limit",
    "census_cubic_bound",
    "pair_bound",
    "workers",
}


def load_config(path: str | Path | None) -> Config:
    cfg = Config()
    if path is None:
        return cfg
    updates: dict = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key in _INT_KEYS:
            updates[key] = int(float(value))
        elif key == "fit_grid":
            lo, _, hi = value.partition(":")
            updates[key] = (int(lo), int(hi))
        elif key in ("out_dir", "import_path"):
            updates[key] = value
        else:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
    return replace(cfg, **updates)

"""Exhaustive search for s-Cullen numbers that are repunits.

The rectangle s_min..s_max x n_min..n_max is cut into s columns. A column is
the unit of work, of parallelism and of checkpointing: workers take whole
columns (so s**n stays incremental), results are merged back in ascending s,
and a checkpoint records the highest s whose column, and every column below
it, is finished.
"""

from __future__ import annotations

import hashlib
import json
import logging
import multiprocessing
import os
import time
from dataclasses import dataclass, field
from functools import partial
from typing import Iterable, Iterator

from .bounds import enumerate_eq1_exceptions, enumerate_eq3_exceptions
from .cullen import CullenIndex, cullen_column
from .families import FamilyTag, classify
from .repunit import RepunitForm, detect_repunits

logger = logging.getLogger(__name__)

ORDER_VERSION = "s-asc,n-asc;v1"
CHECKPOINT_FORMAT = 1


class CheckpointError(Exception):
    """Checkpoint file is unreadable, malformed, or belongs to another search."""


class CheckpointNotFound(CheckpointError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    s_min: int
    s_max: int
    n_min: int
    n_max: int
    workers: int = 1
    checkpoint_path: str | None = None
    exclude_families: bool = False
    report_conditional_exclusions: bool = False
    # continue from checkpoint_path instead of starting over
    resume: bool = False
    # columns between checkpoint writes
    checkpoint_every: int = 100
    # stop cleanly once this column is done, as if interrupted
    stop_after_s: int | None = None

    def __post_init__(self) -> None:
        if not 2 <= self.s_min <= self.s_max:
            raise ValueError(f"need 2 <= s_min <= s_max, got {self.s_min}..{self.s_max}")
        if not 1 <= self.n_min <= self.n_max:
            raise ValueError(f"need 1 <= n_min <= n_max, got {self.n_min}..{self.n_max}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        if self.checkpoint_every < 1:
            raise ValueError(f"checkpoint_every must be >= 1, got {self.checkpoint_every}")
        if self.resume and not self.checkpoint_path:
            raise ValueError("resume needs a checkpoint path")

    def canonical(self) -> str:
        return (
            f"s_min={self.s_min};s_max={self.s_max};"
            f"n_min={self.n_min};n_max={self.n_max};order={ORDER_VERSION}"
        )

    def fingerprint(self) -> str:
        return hashlib.sha256(self.canonical().encode()).hexdigest()

    @property
    def cells_per_column(self) -> int:
        return self.n_max - self.n_min + 1


@dataclass(frozen=True)
class HitRecord:
    index: CullenIndex
    value: int
    forms: tuple[RepunitForm, ...]
    family: FamilyTag

    def to_json(self) -> dict:
        return {
            "s": self.index.s,
            "n": self.index.n,
            "value": str(self.value),
            "forms": [f.to_json() for f in self.forms],
            "family": self.family.to_json(),
        }

    @classmethod
    def from_json(cls, d: dict) -> HitRecord:
        return cls(
            CullenIndex(int(d["s"]), int(d["n"])),
            int(d["value"]),
            tuple(RepunitForm(int(f["b"]), int(f["q"])) for f in d["forms"]),
            FamilyTag(d["family"]),
        )


@dataclass
class Checkpoint:
    config_fingerprint: str
    completed_s: int
    hits_so_far: list[HitRecord] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "format": CHECKPOINT_FORMAT,
            "config_fingerprint": self.config_fingerprint,
            "completed_s": self.completed_s,
            "hits_so_far": [h.to_json() for h in self.hits_so_far],
        }


def checkpoint_save(path: str, ckpt: Checkpoint) -> None:
    """Write atomically: a crash mid-write leaves the previous checkpoint intact."""
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(ckpt.to_json(), fh, separators=(",", ":"))
        fh.write("\n")
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)


def checkpoint_load(path: str) -> Checkpoint:
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except FileNotFoundError:
        raise CheckpointNotFound(f"checkpoint not found: {path}") from None
    except (OSError, ValueError) as exc:
        raise CheckpointError(f"cannot read checkpoint {path}: {exc}") from exc
    try:
        if raw["format"] != CHECKPOINT_FORMAT:
            raise CheckpointError(f"unsupported checkpoint format {raw['format']!r}")
        return Checkpoint(
            str(raw["config_fingerprint"]),
            int(raw["completed_s"]),
            [HitRecord.from_json(h) for h in raw["hits_so_far"]],
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise CheckpointError(f"corrupt checkpoint {path}: {exc!r}") from exc


def checkpoint_resume(path: str, cfg: SearchConfig) -> Checkpoint:
    ckpt = checkpoint_load(path)
    if ckpt.config_fingerprint != cfg.fingerprint():
        raise CheckpointError(
            f"checkpoint {path} was written for a different search "
            f"(fingerprint {ckpt.config_fingerprint[:12]}..., expected {cfg.fingerprint()[:12]}...)"
        )
    if not cfg.s_min - 1 <= ckpt.completed_s <= cfg.s_max:
        raise CheckpointError(f"checkpoint completed_s={ckpt.completed_s} is outside the range")
    return ckpt


def scan_column(s: int, n_min: int, n_max: int) -> list[HitRecord]:
    """Every repunit hit in column s, ascending n."""
    hits = []
    for n, value in cullen_column(s, n_min, n_max):
        forms = detect_repunits(value)
        if forms:
            idx = CullenIndex(s, n)
            hits.append(HitRecord(idx, value, tuple(forms), classify(idx)))
    return hits


def _columns(cfg: SearchConfig, start: int) -> Iterator[tuple[int, list[HitRecord]]]:
    """(s, hits) for s = start..s_max in ascending s, whatever the worker count."""
    s_values = range(start, cfg.s_max + 1)
    work = partial(scan_column, n_min=cfg.n_min, n_max=cfg.n_max)
    if cfg.workers == 1 or len(s_values) < 2:
        for s in s_values:
            yield s, work(s)
        return
    # contiguous stripes of columns per task; imap hands results back in order
    chunk = max(1, min(256, len(s_values) // (cfg.workers * 16)))
    with multiprocessing.Pool(cfg.workers) as pool:
        yield from zip(s_values, pool.imap(work, s_values, chunksize=chunk))


@dataclass(frozen=True)
class CellExclusion:
    """Whether the conditional bounds rule out a repunit at this cell.

    Each field is "excluded", "open" (cell is in the finite exception set),
    or "n/a" (the bound does not cover this n).
    """

    length3: str
    longer: str


def cell_exclusion(
    s: int,
    n: int,
    eq1_set: set[tuple[int, int]] | None = None,
    eq3_set: set[tuple[int, int]] | None = None,
) -> CellExclusion:
    eq1_set = enumerate_eq1_exceptions() if eq1_set is None else eq1_set
    eq3_set = enumerate_eq3_exceptions() if eq3_set is None else eq3_set
    length3 = "n/a" if n < 3 else ("open" if (s, n) in eq1_set else "excluded")
    longer = "n/a" if n < 2 else ("open" if (s, n) in eq3_set else "excluded")
    return CellExclusion(length3, longer)


def conditional_exclusion_report(cfg: SearchConfig) -> dict:
    """Counts of cells that the abc-conditional bounds would exclude.

    Informational only: a cell counted as excluded is still ruled out only
    up to the finitely many abc-exceptional bases, and the unconditional
    scan never skips it. Cells left open are listed explicitly; there are
    at most a few thousand of them whatever the range.
    """
    eq1_set = enumerate_eq1_exceptions()
    eq3_set = enumerate_eq3_exceptions()

    def in_range(cell: tuple[int, int]) -> bool:
        s, n = cell
        return cfg.s_min <= s <= cfg.s_max and cfg.n_min <= n <= cfg.n_max

    open_cells = set(filter(in_range, eq1_set | eq3_set))
    # every other cell with n >= 3 is excluded by both bounds, so only the
    # exception sets and the n <= 2 rows need visiting
    small_n = range(cfg.n_min, min(cfg.n_max, 2) + 1)
    visit = open_cells | {(s, n) for s in range(cfg.s_min, cfg.s_max + 1) for n in small_n}

    counts = {
        "length3": {"excluded": 0, "open": 0, "n/a": 0},
        "longer": {"excluded": 0, "open": 0, "n/a": 0},
    }
    both = 0
    for s, n in visit:
        ex = cell_exclusion(s, n, eq1_set, eq3_set)
        counts["length3"][ex.length3] += 1
        counts["longer"][ex.longer] += 1
        both += ex.length3 == ex.longer == "excluded"
    total = (cfg.s_max - cfg.s_min + 1) * cfg.cells_per_column
    rest = total - len(visit)
    counts["length3"]["excluded"] += rest
    counts["longer"]["excluded"] += rest
    both += rest
    return {
        "cells": total,
        "length3": counts["length3"],
        "longer": counts["longer"],
        "excluded_both": both,
        "open_length3": sorted([s, n] for (s, n) in open_cells if (s, n) in eq1_set),
        "open_longer": sorted([s, n] for (s, n) in open_cells if (s, n) in eq3_set),
    }


@dataclass
class SearchReport:
    config: SearchConfig
    all_hits: list[HitRecord]
    complete: bool
    completed_s: int
    wall_time: float = 0.0
    conditional: dict | None = None

    @property
    def hits(self) -> list[HitRecord]:
        """Hits as reported: known-family hits dropped when exclude_families is set."""
        if self.config.exclude_families:
            return [h for h in self.all_hits if h.family is FamilyTag.NONE]
        return list(self.all_hits)

    @property
    def cells_scanned(self) -> int:
        return (self.completed_s - self.config.s_min + 1) * self.config.cells_per_column

    def hits_by_family(self) -> dict[str, int]:
        counts = {"A": 0, "B": 0, "none": 0}
        for h in self.all_hits:
            counts[h.family.value or "none"] += 1
        return counts

    @property
    def new_hits(self) -> list[HitRecord]:
        return [h for h in self.all_hits if h.family is FamilyTag.NONE]

    def summary(self) -> dict:
        cfg = self.config
        out = {
            "summary": True,
            "s_min": cfg.s_min,
            "s_max": cfg.s_max,
            "n_min": cfg.n_min,
            "n_max": cfg.n_max,
            "complete": self.complete,
            "completed_s": self.completed_s,
            "cells_scanned": self.cells_scanned,
            "hits_by_family": self.hits_by_family(),
            "exclude_families": cfg.exclude_families,
            "hits_reported": len(self.hits),
        }
        if self.conditional is not None:
            out["conditional"] = self.conditional
        return out

    def jsonl_lines(self) -> Iterable[str]:
        for h in self.hits:
            yield json.dumps(h.to_json(), separators=(",", ":"))
        yield json.dumps(self.summary(), separators=(",", ":"))

    def to_jsonl(self) -> str:
        return "".join(line + "\n" for line in self.jsonl_lines())


def run_search(cfg: SearchConfig) -> SearchReport:
    """Scan every cell of the rectangle and collect repunit hits.

    Wall time is kept on the report object but left out of the JSONL output
    so that reports compare byte for byte.
    """
    t0 = time.perf_counter()
    hits: list[HitRecord] = []
    completed_s = cfg.s_min - 1
    if cfg.resume:
        assert cfg.checkpoint_path is not None
        ckpt = checkpoint_resume(cfg.checkpoint_path, cfg)
        hits = list(ckpt.hits_so_far)
        completed_s = ckpt.completed_s
        logger.info("resuming after s=%d with %d hits", completed_s, len(hits))

    def save() -> None:
        if cfg.checkpoint_path:
            checkpoint_save(cfg.checkpoint_path, Checkpoint(cfg.fingerprint(), completed_s, hits))

    stopped = False
    since_save = 0
    columns = _columns(cfg, completed_s + 1)
    try:
        for s, column_hits in columns:
            hits.extend(column_hits)
            completed_s = s
            since_save += 1
            logger.debug("column s=%d done, %d hits", s, len(column_hits))
            if since_save >= cfg.checkpoint_every:
                save()
                since_save = 0
            if cfg.stop_after_s is not None and cfg.stop_after_s <= s < cfg.s_max:
                stopped = True
                break
    finally:
        # shuts the worker pool down when we leave early
        columns.close()
    save()

    report = SearchReport(
        cfg,
        hits,
        complete=not stopped,
        completed_s=completed_s,
        wall_time=time.perf_counter() - t0,
    )
    if cfg.report_conditional_exclusions:
        report.conditional = conditional_exclusion_report(cfg)
    return report

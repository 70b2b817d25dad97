"""Synthetic benchmark data generators and labeled point-cloud I/O.

Four built-in generators produce the standard two-dimensional test
geometries: a disk nested inside two circles (``dgp1``), three disjoint
axis-aligned rectangles (``dgp2``), and two Gaussian-mixture layouts of
increasing difficulty (``dgp3``, ``dgp3prime``). A ``custom`` kind accepts
an arbitrary isotropic Gaussian mixture.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .exceptions import ParseError, ValidationError

DGP_KINDS = ("dgp1", "dgp2", "dgp3", "dgp3prime", "custom")

# dgp2 rectangles as (xmin, xmax, ymin, ymax). The first one is the large
# 7 x 16 block on the left, the other two are the 5 x 5 blocks on the right.
_DGP2_RECTS = ((-15.0, -8.0, -8.0, 8.0), (10.0, 15.0, 3.0, 8.0), (10.0, 15.0, -8.0, -3.0))


@dataclass(frozen=True)
class LabeledDataset:
    """n points in R^p with optional 1-based cluster labels."""

    points: np.ndarray
    labels: np.ndarray | None = None
    seed: int | None = None

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[0] < 1 or pts.shape[1] < 1:
            raise ValidationError(f"points must be a nonempty n x p matrix, got shape {pts.shape}")
        object.__setattr__(self, "points", pts)
        if self.labels is not None:
            lab = np.asarray(self.labels, dtype=int)
            if lab.shape != (pts.shape[0],):
                raise ValidationError("labels must have one entry per point")
            k = lab.max(initial=0)
            if lab.min(initial=1) < 1 or set(np.unique(lab)) != set(range(1, k + 1)):
                raise ValidationError("labels must cover 1..K with every cluster nonempty")
            object.__setattr__(self, "labels", lab)

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def p(self) -> int:
        return self.points.shape[1]

    @property
    def n_clusters(self) -> int | None:
        return None if self.labels is None else int(self.labels.max())


@dataclass(frozen=True)
class DgpSpec:
    """Parameters of one generator, defaulting to the benchmark values.

    ``weights`` are cluster proportions; cluster sizes are apportioned
    deterministically (largest remainder), so equal (spec, n, seed) always
    reproduce the same dataset bit for bit.
    """

    kind: str
    weights: tuple[float, ...]
    radii: tuple[float, ...] | None = None          # dgp1: disk radius, then circle radii
    rectangles: tuple[tuple[float, float, float, float], ...] | None = None  # dgp2
    centers: tuple[tuple[float, ...], ...] | None = None                     # gaussian kinds
    sds: tuple[float, ...] | None = None                                     # gaussian kinds
    noise_sd: float = 0.0                           # dgp1 radial jitter

    def __post_init__(self):
        if self.kind not in DGP_KINDS:
            raise ValidationError(f"unknown DGP kind {self.kind!r}; expected one of {DGP_KINDS}")
        w = np.asarray(self.weights, dtype=float)
        if w.size < 1 or np.any(w < 0):
            raise ValidationError("weights must be nonnegative")
        if abs(w.sum() - 1.0) > 1e-12:
            raise ValidationError(f"weights must sum to 1 within 1e-12, got {w.sum()!r}")
        if self.noise_sd < 0:
            raise ValidationError("noise_sd must be nonnegative")
        if self.sds is not None and any(s <= 0 for s in self.sds):
            raise ValidationError("standard deviations must be positive")
        if self.kind == "dgp1" and len(self.radii or ()) != len(self.weights):
            raise ValidationError("dgp1 needs one radius per cluster")
        if self.kind == "dgp2" and len(self.rectangles or ()) != len(self.weights):
            raise ValidationError("dgp2 needs one rectangle per cluster")
        if self.kind in ("dgp3", "dgp3prime", "custom"):
            if self.centers is None or self.sds is None:
                raise ValidationError(f"{self.kind} needs centers and sds")
            if not (len(self.centers) == len(self.sds) == len(self.weights)):
                raise ValidationError("centers, sds and weights must have equal length")

    @property
    def n_clusters(self) -> int:
        return len(self.weights)


def dgp1(noise_sd: float = 0.0) -> DgpSpec:
    """Unit disk plus circles of radius 2.5 and 4, proportions (1/4, 1/4, 1/2)."""
    return DgpSpec(kind="dgp1", weights=(0.25, 0.25, 0.5), radii=(1.0, 2.5, 4.0),
                   noise_sd=noise_sd)


def dgp2() -> DgpSpec:
    """Three disjoint rectangles, sampled uniformly over their union (area weights)."""
    areas = [(xmax - xmin) * (ymax - ymin) for xmin, xmax, ymin, ymax in _DGP2_RECTS]
    total = sum(areas)
    weights = tuple(a / total for a in areas)
    return DgpSpec(kind="dgp2", weights=weights, rectangles=_DGP2_RECTS)


def dgp3() -> DgpSpec:
    """Equal mixture of three bivariate Gaussians; one wide, two narrow."""
    return DgpSpec(kind="dgp3", weights=(1 / 3, 1 / 3, 1 / 3),
                   centers=((-6.0, 0.0), (0.0, 0.0), (2.5, 0.0)), sds=(2.0, 0.5, 0.5))


def dgp3prime() -> DgpSpec:
    """Harder Gaussian mixture: third center moved to 1.45, weights (1/4, 1/4, 1/2)."""
    return DgpSpec(kind="dgp3prime", weights=(0.25, 0.25, 0.5),
                   centers=((-6.0, 0.0), (0.0, 0.0), (1.45, 0.0)), sds=(2.0, 0.5, 0.5))


def custom_mixture(weights, centers, sds) -> DgpSpec:
    """Arbitrary isotropic Gaussian mixture."""
    return DgpSpec(kind="custom", weights=tuple(weights),
                   centers=tuple(tuple(c) for c in centers), sds=tuple(sds))


def spec_by_name(kind: str, noise_sd: float = 0.0) -> DgpSpec:
    """Built-in spec from its kind name."""
    if kind == "dgp1":
        return dgp1(noise_sd=noise_sd)
    if kind == "dgp2":
        return dgp2()
    if kind == "dgp3":
        return dgp3()
    if kind == "dgp3prime":
        return dgp3prime()
    raise ValidationError(f"no built-in defaults for DGP kind {kind!r}")


def _apportion(n: int, weights) -> np.ndarray:
    """Split n into integer counts proportional to weights (largest remainder)."""
    w = np.asarray(weights, dtype=float)
    exact = n * w
    counts = np.floor(exact).astype(int)
    remainder = exact - counts
    short = n - counts.sum()
    # ties: larger remainder first, then smaller index
    order = np.lexsort((np.arange(w.size), -remainder))
    counts[order[:short]] += 1
    # every cluster must be nonempty; steal from the largest if needed
    while counts.min() == 0:
        counts[np.argmax(counts)] -= 1
        counts[np.argmin(counts)] += 1
    return counts


def generate(spec: DgpSpec, n: int, seed: int) -> LabeledDataset:
    """Sample n labeled points from the generator, deterministically in seed."""
    k = spec.n_clusters
    if n < k:
        raise ValidationError(f"n={n} is smaller than the number of clusters {k}")
    rng = np.random.default_rng(seed)
    counts = _apportion(n, spec.weights)
    blocks = []
    for c, m in enumerate(counts):
        if spec.kind == "dgp1":
            r0 = spec.radii[c]
            theta = rng.uniform(0.0, 2.0 * math.pi, size=m)
            if c == 0:
                # disk: uniform by area
                r = r0 * np.sqrt(rng.uniform(size=m))
            else:
                # circle with optional radial jitter
                r = r0 + (spec.noise_sd * rng.standard_normal(m) if spec.noise_sd > 0 else 0.0)
            blocks.append(np.column_stack([r * np.cos(theta), r * np.sin(theta)]))
        elif spec.kind == "dgp2":
            xmin, xmax, ymin, ymax = spec.rectangles[c]
            blocks.append(np.column_stack([rng.uniform(xmin, xmax, size=m),
                                           rng.uniform(ymin, ymax, size=m)]))
        else:
            mu = np.asarray(spec.centers[c], dtype=float)
            blocks.append(mu + spec.sds[c] * rng.standard_normal((m, mu.size)))
    points = np.vstack(blocks)
    labels = np.repeat(np.arange(1, k + 1), counts)
    return LabeledDataset(points=points, labels=labels, seed=seed)


# ---------------------------------------------------------------------------
# CSV and manifest I/O


def save_csv(dataset: LabeledDataset, path) -> None:
    """Write points (and labels, when present) as CSV with x1..xp[,label] columns."""
    path = Path(path)
    cols = [f"x{j + 1}" for j in range(dataset.p)]
    if dataset.labels is not None:
        cols.append("label")
    lines = [",".join(cols)]
    for i in range(dataset.n):
        row = [format(v, ".17g") for v in dataset.points[i]]
        if dataset.labels is not None:
            row.append(str(int(dataset.labels[i])))
        lines.append(",".join(row))
    path.write_text("\n".join(lines) + "\n")


def load_csv(path) -> LabeledDataset:
    """Read a dataset written by :func:`save_csv`; value-identical round trip."""
    path = Path(path)
    text = path.read_text()
    rows = [r for r in text.splitlines()]
    if not rows:
        raise ParseError("empty file", line=1)
    header = [c.strip() for c in rows[0].split(",")]
    has_label = bool(header) and header[-1] == "label"
    p = len(header) - (1 if has_label else 0)
    if p < 1:
        raise ParseError("header defines no coordinate columns", line=1)
    points, labels = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row.strip():
            continue
        cells = row.split(",")
        if len(cells) != len(header):
            raise ParseError(
                f"expected {len(header)} columns, found {len(cells)}", line=lineno)
        try:
            points.append([float(c) for c in cells[:p]])
            if has_label:
                labels.append(int(cells[p]))
        except ValueError as exc:
            raise ParseError(str(exc), line=lineno) from exc
    if not points:
        raise ParseError("no data rows (header-only file)", line=1)
    return LabeledDataset(points=np.asarray(points, dtype=float),
                          labels=np.asarray(labels, dtype=int) if has_label else None)


def spec_to_dict(spec: DgpSpec) -> dict:
    out = {"kind": spec.kind, "weights": list(spec.weights), "noise_sd": spec.noise_sd}
    if spec.radii is not None:
        out["radii"] = list(spec.radii)
    if spec.rectangles is not None:
        out["rectangles"] = [list(r) for r in spec.rectangles]
    if spec.centers is not None:
        out["centers"] = [list(c) for c in spec.centers]
    if spec.sds is not None:
        out["sds"] = list(spec.sds)
    return out


def spec_from_dict(d: dict) -> DgpSpec:
    try:
        return DgpSpec(
            kind=d["kind"],
            weights=tuple(d["weights"]),
            radii=tuple(d["radii"]) if "radii" in d else None,
            rectangles=tuple(tuple(r) for r in d["rectangles"]) if "rectangles" in d else None,
            centers=tuple(tuple(c) for c in d["centers"]) if "centers" in d else None,
            sds=tuple(d["sds"]) if "sds" in d else None,
            noise_sd=float(d.get("noise_sd", 0.0)),
        )
    except KeyError as exc:
        raise ValidationError(f"DGP spec dict missing key {exc}") from exc


def save_manifest(spec: DgpSpec, n: int, seed: int, path) -> None:
    """Write the JSON manifest {kind, n, seed, params} next to generated data."""
    params = spec_to_dict(spec)
    kind = params.pop("kind")
    Path(path).write_text(json.dumps(
        {"kind": kind, "n": n, "seed": seed, "params": params},
        indent=2, sort_keys=True) + "\n")

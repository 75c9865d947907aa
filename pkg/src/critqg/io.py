"""File formats: CSV time series, binary snapshots, PGM heatmaps, run manifest."""

from __future__ import annotations

import csv
import hashlib
import json
import math
import struct
from pathlib import Path

import numpy as np

from .spectral import PhysicalField, SpectralField, lattice

TIMESERIES_COLUMNS = ("t", "l2", "l4", "linf", "h1", "h2", "weak", "Y", "gevrey_y", "gevrey_z")
SNAPSHOT_SCHEMA = "critqg-snapshot"
SNAPSHOT_VERSION = 1
_RECORD = struct.Struct("<iidd")


class SchemaError(ValueError):
    pass


def _fmt(x) -> str:
    return "" if x is None else format(float(x), ".17g")


def timeseries_rows(traj) -> list[list[str]]:
    rows = []
    for r in traj.records:
        rows.append([_fmt(v) for v in (
            r.t, r.lp_norms[2.0], r.lp_norms[4.0], r.lp_norms[math.inf],
            r.sobolev[1.0], r.sobolev[2.0], r.weak_norm, r.fourier_l1, r.gevrey_y, r.gevrey_z)])
    return rows


def write_timeseries(traj, path) -> Path:
    path = Path(path)
    try:
        with path.open("w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(TIMESERIES_COLUMNS)
            w.writerows(timeseries_rows(traj))
    except OSError as exc:
        raise OSError(f"cannot write time series to {path}: {exc}") from exc
    return path


def read_timeseries(path) -> dict[str, list]:
    """Column name -> list of floats (None for empty cells)."""
    with Path(path).open(newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if tuple(header) != TIMESERIES_COLUMNS:
            raise SchemaError(f"unexpected time-series header {header}")
        cols = {h: [] for h in header}
        for row in reader:
            for h, v in zip(header, row):
                cols[h].append(None if v == "" else float(v))
    return cols


def write_snapshot(t: SpectralField, time: float, path) -> Path:
    """JSON header line, then (j1, j2, re, im) records as little-endian int32/int32/f64/f64."""
    n = t.n_max
    lat = lattice(n)
    header = {"schema": SNAPSHOT_SCHEMA, "version": SNAPSHOT_VERSION, "n_max": n,
              "time": float(time), "count": (2 * n + 1) ** 2}
    c = t.coeffs
    buf = bytearray(json.dumps(header, sort_keys=True).encode() + b"\n")
    # row-major over (j1, j2) is lexicographic order
    for j1, j2, z in zip(lat.j1.ravel(), lat.j2.ravel(), c.ravel()):
        buf += _RECORD.pack(int(j1), int(j2), z.real, z.imag)
    path = Path(path)
    try:
        path.write_bytes(bytes(buf))
    except OSError as exc:
        raise OSError(f"cannot write snapshot to {path}: {exc}") from exc
    return path


def read_snapshot(path) -> tuple[SpectralField, float]:
    data = Path(path).read_bytes()
    nl = data.find(b"\n")
    if nl < 0:
        raise SchemaError("snapshot has no header line")
    try:
        header = json.loads(data[:nl])
    except json.JSONDecodeError as exc:
        raise SchemaError(f"unreadable snapshot header: {exc}") from None
    if header.get("schema") != SNAPSHOT_SCHEMA or header.get("version") != SNAPSHOT_VERSION:
        raise SchemaError(f"unsupported snapshot schema {header.get('schema')!r} v{header.get('version')}")
    n, count = int(header["n_max"]), int(header["count"])
    payload = data[nl + 1:]
    if count != (2 * n + 1) ** 2 or len(payload) != count * _RECORD.size:
        raise SchemaError(
            f"record count mismatch: header says {count}, n_max={n} needs {(2 * n + 1) ** 2}, "
            f"payload holds {len(payload) / _RECORD.size:g}")
    rec = np.frombuffer(payload, dtype=np.dtype([("j1", "<i4"), ("j2", "<i4"), ("re", "<f8"), ("im", "<f8")]))
    lat = lattice(n)
    if not (np.array_equal(rec["j1"], lat.j1.ravel()) and np.array_equal(rec["j2"], lat.j2.ravel())):
        raise SchemaError("snapshot records are not in lexicographic wave-vector order")
    coeffs = (rec["re"] + 1j * rec["im"]).reshape(lat.shape)
    return SpectralField(coeffs), float(header["time"])


def heatmap_bytes(f: PhysicalField) -> bytes:
    """8-bit P5 graymap; image column p is x1 index p, row q is x2 index q."""
    v = f.values
    lo, hi = float(v.min()), float(v.max())
    if hi == lo:
        pix = np.full(v.shape, 128, dtype=np.uint8)
    else:
        pix = np.rint(255 * (v - lo) / (hi - lo)).astype(np.uint8)
    m = f.m
    return f"P5\n{m} {m}\n255\n".encode() + np.ascontiguousarray(pix.T).tobytes()


def write_heatmap(f: PhysicalField, path) -> Path:
    path = Path(path)
    try:
        path.write_bytes(heatmap_bytes(f))
    except OSError as exc:
        raise OSError(f"cannot write heatmap to {path}: {exc}") from exc
    return path


def read_heatmap(path) -> np.ndarray:
    """Pixels as a (rows, cols) uint8 array."""
    data = Path(path).read_bytes()
    parts = data.split(b"\n", 3)
    if parts[0] != b"P5" or len(parts) < 4:
        raise SchemaError("not a binary P5 graymap")
    w, h = (int(x) for x in parts[1].split())
    if int(parts[2]) != 255 or len(parts[3]) != w * h:
        raise SchemaError("graymap size mismatch")
    return np.frombuffer(parts[3], dtype=np.uint8).reshape(h, w)


def file_digest(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def write_manifest(path, config: dict, version: str, seed: int, started: str, finished: str,
                   files: list) -> Path:
    path = Path(path)
    inventory = [{"path": Path(f).name, "bytes": Path(f).stat().st_size, "sha256": file_digest(f)}
                 for f in files]
    doc = {"artifact_version": version, "seed": seed, "config": config,
           "started": started, "finished": finished, "files": inventory}
    path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return path


def verify_manifest(path) -> list[str]:
    """Names of listed files whose digest no longer matches (empty when intact)."""
    path = Path(path)
    doc = json.loads(path.read_text())
    bad = []
    for entry in doc["files"]:
        f = path.parent / entry["path"]
        if not f.exists() or file_digest(f) != entry["sha256"]:
            bad.append(entry["path"])
    return bad


def _jsonable(x):
    if isinstance(x, float) and not math.isfinite(x):
        return repr(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.generic):
        return x.item()
    return x


def write_reports(reports, path) -> Path:
    path = Path(path)
    doc = {"schema": "critqg-reports", "version": 1,
           "reports": [_jsonable(r.to_dict()) for r in reports]}
    path.write_text(json.dumps(doc, indent=2) + "\n")
    return path


def shell_spectrum(t: SpectralField) -> list[tuple[int, float, int]]:
    """(k, mean |c(j)| over round(|j|) == k, mode count) for k >= 1."""
    lat = t.lattice
    shells = np.rint(lat.modulus).astype(int)
    amp = np.abs(t.coeffs)
    out = []
    for k in range(1, int(shells.max()) + 1):
        sel = shells == k
        if sel.any():
            out.append((k, float(amp[sel].mean()), int(sel.sum())))
    return out

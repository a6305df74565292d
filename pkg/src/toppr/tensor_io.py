"""Feature matrix I/O.

Array files use a deliberately narrow container format: binary, version 1.0
only, little-endian float32 or float64 payload, C order, exactly two shape
dimensions, header padded so the payload starts at a 64-byte boundary, and
not a single trailing byte after rows*cols elements. Anything else is
rejected up front; silent coercion is how evaluation pipelines end up
scoring garbage. Text tables are plain numeric CSV ('.' decimal separator,
',' delimiter, optional single header row).

All payloads are widened to float64 on load; every downstream computation
runs in float64.
"""

from __future__ import annotations

import ast
import json
from dataclasses import dataclass

import numpy as np

from .errors import (
    IoError,
    MalformedHeader,
    NonFinite,
    Not2D,
    ParseError,
    RaggedRows,
    TooFewRows,
    UnsupportedDtype,
)

_MAGIC = b"\x93NUMPY"
_SUPPORTED_DESCR = {"<f4": np.float32, "<f8": np.float64}
_ALIGN = 64


@dataclass(frozen=True)
class NpyHeader:
    """Parsed header of a supported array file."""

    descr: str
    fortran_order: bool
    shape: tuple[int, ...]


@dataclass(frozen=True)
class FeatureMatrix:
    """Validated 2-D float64 feature matrix.

    Invariants: data is C-contiguous float64, 2-D, at least one row and one
    column, every entry finite.
    """

    data: np.ndarray

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @classmethod
    def from_array(cls, arr: np.ndarray, source: str = "array") -> "FeatureMatrix":
        arr = np.asarray(arr)
        if arr.ndim != 2:
            raise Not2D(f"{source}: expected a 2-D matrix, got {arr.ndim}-D")
        if arr.shape[0] < 1:
            raise TooFewRows(f"{source}: matrix has no rows")
        if arr.shape[1] < 1:
            raise Not2D(f"{source}: matrix has no columns")
        out = np.ascontiguousarray(arr, dtype=np.float64)
        if not np.isfinite(out).all():
            raise NonFinite(f"{source}: input contains NaN or infinity")
        return cls(out)


def ensure_matrix(x, name: str = "input") -> np.ndarray:
    """Coerce an ndarray or FeatureMatrix to validated float64 data."""
    if isinstance(x, FeatureMatrix):
        return x.data
    return FeatureMatrix.from_array(x, source=name).data


def _parse_header_dict(text: str, path: str) -> NpyHeader:
    try:
        raw = ast.literal_eval(text)
    except (ValueError, SyntaxError) as exc:
        raise MalformedHeader(f"{path}: unparseable header dict") from exc
    if not isinstance(raw, dict) or set(raw) != {"descr", "fortran_order", "shape"}:
        raise MalformedHeader(f"{path}: header must have exactly descr/fortran_order/shape")
    descr = raw["descr"]
    if not isinstance(descr, str) or descr not in _SUPPORTED_DESCR:
        raise UnsupportedDtype(f"{path}: dtype {descr!r} not supported (need <f4 or <f8)")
    if raw["fortran_order"] is not False:
        raise MalformedHeader(f"{path}: fortran_order must be False")
    shape = raw["shape"]
    if not (isinstance(shape, tuple) and all(isinstance(s, int) and s >= 0 for s in shape)):
        raise MalformedHeader(f"{path}: bad shape entry {shape!r}")
    if len(shape) != 2:
        raise Not2D(f"{path}: expected 2-D shape, got {len(shape)}-D {shape}")
    return NpyHeader(descr=descr, fortran_order=False, shape=shape)


def read_npy(path: str) -> FeatureMatrix:
    """Read one binary array file into a validated float64 matrix."""
    try:
        with open(path, "rb") as f:
            blob = f.read()
    except OSError as exc:
        raise IoError(f"{path}: {exc}") from exc

    if len(blob) < 10 or blob[:6] != _MAGIC:
        raise MalformedHeader(f"{path}: not an array file (bad magic)")
    major, minor = blob[6], blob[7]
    if (major, minor) != (1, 0):
        raise MalformedHeader(f"{path}: unsupported format version {major}.{minor}")
    hlen = int.from_bytes(blob[8:10], "little")
    data_start = 10 + hlen
    if len(blob) < data_start:
        raise MalformedHeader(f"{path}: truncated header")
    if data_start % _ALIGN != 0:
        raise MalformedHeader(f"{path}: header not padded to {_ALIGN}-byte alignment")
    header = _parse_header_dict(blob[10:data_start].decode("latin1").strip(), path)

    rows, cols = header.shape
    dtype = _SUPPORTED_DESCR[header.descr]
    want = rows * cols * dtype().itemsize
    got = len(blob) - data_start
    if got < want:
        raise MalformedHeader(f"{path}: payload truncated ({got} bytes, need {want})")
    if got > want:
        raise MalformedHeader(f"{path}: {got - want} trailing bytes after payload")
    data = np.frombuffer(blob, dtype=dtype, count=rows * cols, offset=data_start)
    return FeatureMatrix.from_array(data.reshape(rows, cols), source=path)


def write_npy(path: str, arr: np.ndarray) -> None:
    """Write a 2-D float32/float64 matrix in the supported container format.

    Round trip through read_npy reproduces the float64 payload bit for bit.
    """
    arr = np.asarray(arr)
    if arr.ndim != 2:
        raise Not2D(f"{path}: can only write 2-D matrices, got {arr.ndim}-D")
    if arr.dtype == np.float64:
        descr = "<f8"
    elif arr.dtype == np.float32:
        descr = "<f4"
    else:
        raise UnsupportedDtype(f"{path}: can only write float32/float64, got {arr.dtype}")
    out = np.ascontiguousarray(arr)

    head = f"{{'descr': '{descr}', 'fortran_order': False, 'shape': ({out.shape[0]}, {out.shape[1]}), }}"
    pad = -(10 + len(head) + 1) % _ALIGN
    header = head.encode("latin1") + b" " * pad + b"\n"
    try:
        with open(path, "wb") as f:
            f.write(_MAGIC)
            f.write(bytes([1, 0]))
            f.write(len(header).to_bytes(2, "little"))
            f.write(header)
            f.write(out.tobytes())
    except OSError as exc:
        raise IoError(f"{path}: {exc}") from exc


def read_csv(path: str, has_header: bool = False) -> FeatureMatrix:
    """Read a plain numeric CSV table into a validated float64 matrix."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as exc:
        raise IoError(f"{path}: {exc}") from exc

    lines = [ln.rstrip("\r") for ln in text.split("\n")]
    while lines and lines[-1] == "":
        lines.pop()
    if has_header and lines:
        lines = lines[1:]
    if not lines:
        raise TooFewRows(f"{path}: no data rows")

    width = len(lines[0].split(","))
    rows = np.empty((len(lines), width), dtype=np.float64)
    for i, ln in enumerate(lines):
        cells = ln.split(",")
        if len(cells) != width:
            raise RaggedRows(
                f"{path}: row {i + 1} has {len(cells)} columns, expected {width}"
            )
        for j, cell in enumerate(cells):
            try:
                rows[i, j] = float(cell)
            except ValueError as exc:
                raise ParseError(
                    f"{path}: row {i + 1} column {j + 1}: not a number: {cell!r}"
                ) from exc
    return FeatureMatrix.from_array(rows, source=path)


def write_report(path: str | None, report: dict) -> str:
    """Serialize a report dict to JSON; write to path when given.

    Returns the serialized text. Key order is preserved, so repeated runs
    with identical values produce identical bytes.
    """
    text = json.dumps(report, indent=2) + "\n"
    if path is not None:
        try:
            with open(path, "w", encoding="utf-8") as f:
                f.write(text)
        except OSError as exc:
            raise IoError(f"{path}: {exc}") from exc
    return text

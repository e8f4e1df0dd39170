"""Kernel backend selection.

The compiled extension is used when importable; set RDF_SUMMARIZE_KERNEL
to "python" (or "c") to force a backend. Both backends implement the same
score_pairs contract and produce identical scores.
"""

from __future__ import annotations

import os

from . import _kernel_py

try:
    from . import _kernel  # type: ignore[attr-defined]
except ImportError:
    _kernel = None


def _select():
    forced = os.environ.get("RDF_SUMMARIZE_KERNEL", "").strip().lower()
    if forced in ("python", "py", "pure"):
        return _kernel_py
    if forced in ("c", "compiled", "ext"):
        if _kernel is None:
            raise RuntimeError(
                "RDF_SUMMARIZE_KERNEL requests the compiled kernel, "
                "but the extension is not built")
        return _kernel
    return _kernel if _kernel is not None else _kernel_py


_active = _select()


def backend_name() -> str:
    return _active.BACKEND


def score_pairs(*args) -> None:
    _active.score_pairs(*args)


def available_backends() -> list[str]:
    names = ["python"]
    if _kernel is not None:
        names.insert(0, "c")
    return names

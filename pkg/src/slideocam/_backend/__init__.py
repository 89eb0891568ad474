"""Kernel backend selection.

The compiled Cython module is preferred when built; the numpy fallback is
used otherwise.  ``SLIDEOCAM_BACKEND=pure`` or ``=compiled`` forces the
choice (the latter raises if the extension is missing).
"""

from __future__ import annotations

import os

from . import _pure

_forced = os.environ.get("SLIDEOCAM_BACKEND", "").strip().lower()

if _forced == "pure":
    impl = _pure
elif _forced == "compiled":
    from . import _core as impl  # type: ignore[no-redef]
else:
    try:
        from . import _core as impl  # type: ignore[no-redef]
    except ImportError:
        impl = _pure

BACKEND_NAME: str = impl.NAME

geometry_arrays = impl.geometry_arrays
ext_arrays = impl.ext_arrays
ext_v_c = impl.ext_v_c
ext_kappa_p = impl.ext_kappa_p
ext_rho_c = impl.ext_rho_c
ext_abs_mu = impl.ext_abs_mu
ext_q = impl.ext_q


def available_backends() -> list[str]:
    names = ["pure"]
    try:
        from . import _core  # noqa: F401

        names.insert(0, "compiled")
    except ImportError:
        pass
    return names

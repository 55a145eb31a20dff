"""Ambient Fano threefold data: genus, degree, Todd class, exceptional bundles.

Only even genus 6 <= g <= 12 is supported.  The Todd class is known in full
only for genus 6 (Gushel-Mukai); for other genera td2/td3 stay unset unless
the caller provides them.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence, Tuple

from .errors import UnknownObject, UnsupportedGenus
from .exact import as_rational

SUPPORTED_GENERA = (6, 8, 10, 12)

GM_TODD = (Fraction(1), Fraction(1, 2), Fraction(17, 60), Fraction(1, 10))

# ch(U) and ch(U^dual) for genus 6; ch3 fixed by chi(O, U^dual) = 5.
GM_U = (Fraction(2), Fraction(-1), Fraction(1, 10), Fraction(1, 30))
GM_UDUAL = (Fraction(2), Fraction(1), Fraction(1, 10), Fraction(-1, 30))

OptFrac = Optional[Fraction]


@dataclass(frozen=True)
class VarietyParams:
    genus: int
    degree: int
    todd: Tuple[OptFrac, OptFrac, OptFrac, OptFrac]
    e2_ch3: OptFrac = None
    b_ch3: Tuple[OptFrac, OptFrac] = field(default=(None, None))

    @property
    def is_gm(self) -> bool:
        return self.genus == 6

    @property
    def todd_complete(self) -> bool:
        return all(t is not None for t in self.todd)

    @property
    def li_constant(self) -> Fraction:
        """``3/(2d)``: Li's region is ``s^2 - 2q < 3/(2d)`` near the parabola."""
        return Fraction(3, 2 * self.degree)


def make_variety(
    genus: int,
    todd: Optional[Sequence] = None,
    e2_ch3=None,
    b_ch3: Optional[Sequence] = None,
) -> VarietyParams:
    """Build the parameters of an even-genus index-1 Fano threefold.

    ``todd`` overrides the Todd class (all four coefficients, entries may be
    None).  ``e2_ch3`` and ``b_ch3`` supply the ch3 tails that are only known
    for genus 6.
    """
    if isinstance(genus, bool) or not isinstance(genus, int):
        raise UnsupportedGenus(f"genus must be an integer, got {genus!r}")
    if genus not in SUPPORTED_GENERA:
        raise UnsupportedGenus(
            f"genus {genus} not supported (even genus 6..12 only)"
        )
    degree = 2 * genus - 2

    def opt(x):
        return None if x is None else as_rational(x)

    if todd is None:
        td = GM_TODD if genus == 6 else (Fraction(1), Fraction(1, 2), None, None)
    else:
        td = tuple(opt(x) for x in todd)
        if len(td) != 4:
            raise ValueError("todd override needs four coefficients")
        if td[0] != 1 or td[1] != Fraction(1, 2):
            raise ValueError("index-1 threefold forces td0 = 1 and td1 = 1/2")

    if genus == 6:
        e2 = GM_U[3] if e2_ch3 is None else as_rational(e2_ch3)
        tails = (Fraction(1, 20), Fraction(1, 60)) if b_ch3 is None else tuple(
            opt(x) for x in b_ch3
        )
    else:
        e2 = opt(e2_ch3)
        tails = (None, None) if b_ch3 is None else tuple(opt(x) for x in b_ch3)
    return VarietyParams(genus, degree, td, e2, tails)


GM = make_variety(6)


def load_config(source) -> VarietyParams:
    """Read ``{"genus": 10, "todd": [...], "e2_ch3": "p/q"}`` from a path or dict."""
    if isinstance(source, dict):
        data = source
    else:
        data = json.loads(Path(source).read_text())
    if "genus" not in data:
        raise ValueError("config needs a 'genus' key")
    return make_variety(
        data["genus"],
        todd=data.get("todd"),
        e2_ch3=data.get("e2_ch3"),
        b_ch3=data.get("b_ch3"),
    )


_OK = re.compile(r"^O(?:\((-?\d+)\))?$")


def catalog(var: VarietyParams, name: str):
    """Numerical class of a named exceptional object.

    Names: ``O``, ``O(k)``, ``U``, ``Udual`` (genus 6 only), ``E2`` and
    ``E2dual`` (every even genus; ``E2 == U`` for genus 6).
    """
    from .chern import NumChern

    m = _OK.match(name)
    if m:
        k = Fraction(int(m.group(1) or 0))
        return NumChern(1, k, k * k / 2, k**3 / 6)
    if name in ("U", "Udual"):
        if not var.is_gm:
            raise UnknownObject(f"{name} only exists for genus 6; use E2")
        return NumChern(*(GM_U if name == "U" else GM_UDUAL))
    if name in ("E2", "E2dual"):
        ch2 = Fraction(var.genus - 4, 2 * var.degree)
        ch3 = var.e2_ch3
        if name == "E2":
            return NumChern(2, -1, ch2, ch3)
        return NumChern(2, 1, ch2, None if ch3 is None else -ch3)
    raise UnknownObject(f"unknown catalog object {name!r}")

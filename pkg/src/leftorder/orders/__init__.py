"""Total left orders on the supported groups, behind one oracle interface.

``oracle_from_string`` parses command-line style descriptions like
``dehornoy``, ``smirnov:eps=1+1*sqrt2`` or ``tararin:+-``;
``registered_oracles`` builds the standard catalog used by the
cross-cutting invariant checks.
"""

from fractions import Fraction

from ..quadratic import parse_quadratic
from .base import (
    ConjugatedOracle,
    ConvexExtensionOracle,
    FlippedOracle,
    OrderOracle,
    ReversedOracle,
    check_order_invariants,
)
from .braid import DDOracle, DehornoyOracle, handle_reduce, sigma_sign
from .dynlex import DynLexOracle, load_action_file
from .magnus import MagnusOracle, magnus_expand
from .smirnov import SmirnovOracle
from .sunic import SunicOracle, sunic_phi
from .tararin import TararinOracle, all_tararin_oracles
from .thompson import VARIANTS as THOMPSON_VARIANTS
from .thompson import ThompsonOracle
from .torus import TorusKnotOracle
from .vinogradov import VinogradovOracle, vinogradov_sign
from .z2 import IrrationalSlopeOracle, RationalDirectionOracle

__all__ = [
    "OrderOracle", "ReversedOracle", "ConjugatedOracle", "FlippedOracle",
    "ConvexExtensionOracle", "check_order_invariants",
    "DehornoyOracle", "DDOracle", "handle_reduce", "sigma_sign",
    "MagnusOracle", "magnus_expand", "SunicOracle", "sunic_phi",
    "SmirnovOracle", "IrrationalSlopeOracle", "RationalDirectionOracle",
    "TararinOracle", "all_tararin_oracles", "TorusKnotOracle",
    "ThompsonOracle", "THOMPSON_VARIANTS", "VinogradovOracle",
    "vinogradov_sign", "DynLexOracle", "load_action_file",
    "oracle_from_string", "plante_order", "registered_oracles",
]

_SIMPLE = {
    "dehornoy": DehornoyOracle,
    "dd": DDOracle,
    "magnus": MagnusOracle,
    "sunic": SunicOracle,
    "vinogradov": VinogradovOracle,
    "torus": TorusKnotOracle,
}


def _params(parts):
    out = {}
    for part in parts:
        if "=" not in part:
            raise ValueError(f"expected key=value, got {part!r}")
        key, _, value = part.partition("=")
        out[key] = value
    return out


def oracle_from_string(text: str, group) -> OrderOracle:
    """Build an oracle from a description like ``smirnov:eps=sqrt2``."""
    head, _, tail = text.strip().partition(":")
    parts = tail.split(":") if tail else []
    if head in _SIMPLE:
        if parts:
            raise ValueError(f"{head} takes no parameters")
        return _SIMPLE[head](group)
    if head == "smirnov":
        params = _params(parts)
        if "eps" not in params:
            raise ValueError("smirnov needs eps=<quadratic>")
        return SmirnovOracle(group, parse_quadratic(params["eps"]))
    if head == "tararin":
        if len(parts) != 1 or not parts[0] or set(parts[0]) - set("+-"):
            raise ValueError("tararin needs a sign string like tararin:+-")
        signs = tuple(1 if c == "+" else -1 for c in parts[0])
        return TararinOracle(group, signs)
    if head == "z2":
        params = _params(parts)
        if "lambda" in params:
            return IrrationalSlopeOracle(group,
                                         parse_quadratic(params["lambda"]))
        if "dir" in params:
            try:
                x, y = (int(c) for c in params["dir"].split(","))
            except ValueError:
                raise ValueError("dir must be two integers like dir=1,2")
            sub = params.get("sub", "+")
            if sub not in ("+", "-"):
                raise ValueError("sub must be + or -")
            return RationalDirectionOracle(group, (x, y),
                                           1 if sub == "+" else -1)
        raise ValueError("z2 needs lambda=<quadratic> or dir=x,y")
    if head == "thompson":
        if len(parts) != 1:
            raise ValueError("thompson needs a variant like thompson:xminus+")
        return ThompsonOracle(group, parts[0])
    if head == "dynlex":
        params = _params(parts)
        if "file" not in params:
            raise ValueError("dynlex needs file=<action.json>")
        maps, points, marks = load_action_file(params["file"])
        return DynLexOracle.from_maps(group, maps, points, marks)
    raise ValueError(f"unknown order description {text!r}")


def plante_order(group) -> DynLexOracle:
    """The lamplighter order from the piecewise-linear line action."""
    from ..groups.wreath import PlanteAction
    if group.name != "wreath":
        raise ValueError("the lamplighter order needs the wreath group")
    return DynLexOracle.from_action(
        group, PlanteAction(), [Fraction(0), Fraction(1)], name="plante")


def registered_oracles():
    """The standard catalog: every family, plus transformed examples."""
    from ..groups import group_from_string
    from ..quadratic import QuadExpr

    free2 = group_from_string("free:2")
    braid3 = group_from_string("braid:3")
    zn2 = group_from_string("zn:2")
    out = [
        MagnusOracle(free2),
        SunicOracle(free2),
        VinogradovOracle(free2),
        DehornoyOracle(braid3),
        DDOracle(braid3),
        IrrationalSlopeOracle(zn2, QuadExpr.sqrt(2)),
        RationalDirectionOracle(zn2, (1, 2), 1),
        TararinOracle(group_from_string("tararin:2"), (1, 1)),
        SmirnovOracle(group_from_string("bs:2"), QuadExpr.sqrt(2)),
        TorusKnotOracle(group_from_string("torus:3,2")),
    ]
    thompson = group_from_string("thompsonF")
    out.extend(ThompsonOracle(thompson, v) for v in THOMPSON_VARIANTS)
    out.append(plante_order(group_from_string("wreath")))
    out.append(ReversedOracle(DDOracle(braid3)))
    out.append(ConjugatedOracle(DehornoyOracle(braid3),
                                braid3.eval_word(((0, 1),))))
    return out

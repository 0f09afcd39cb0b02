"""Group backends and the textual registry used by the command line.

Group strings look like ``free:2``, ``braid:3``, ``torus:3,2``,
``heisenberg`` -- a family name, optionally followed by ``:`` and
integer parameters.
"""

from .affine import BaumslagSolitarGroup
from .base import Group, semigroup_closure
from .braid import BraidGroup
from .free import FreeAbelianGroup, FreeGroup
from .matrix import HeisenbergGroup, SL3ZGroup
from .promislow import PromislowGroup
from .tararin import TararinGroup
from .thompson import ThompsonFGroup
from .torus import TorusKnotGroup
from .wreath import WreathGroup

_FAMILIES = {
    "free": (FreeGroup, 1),
    "zn": (FreeAbelianGroup, 1),
    "braid": (BraidGroup, 1),
    "tararin": (TararinGroup, 1),
    "bs": (BaumslagSolitarGroup, 1),
    "torus": (TorusKnotGroup, 2),
    "heisenberg": (HeisenbergGroup, 0),
    "sl3z": (SL3ZGroup, 0),
    "promislow": (PromislowGroup, 0),
    "wreath": (WreathGroup, 0),
    "thompsonF": (ThompsonFGroup, 0),
}


def group_from_string(text: str) -> Group:
    """Build a group backend from a registry string like ``torus:3,2``."""
    family, _, argtext = text.strip().partition(":")
    if family not in _FAMILIES:
        known = ", ".join(sorted(_FAMILIES))
        raise ValueError(f"unknown group {family!r} (known: {known})")
    cls, arity = _FAMILIES[family]
    if arity == 0:
        if argtext:
            raise ValueError(f"{family} takes no parameters")
        return cls()
    if not argtext:
        raise ValueError(f"{family} needs {arity} integer parameter(s)")
    try:
        args = [int(p) for p in argtext.split(",")]
    except ValueError:
        raise ValueError(f"bad parameters for {family}: {argtext!r}") from None
    if len(args) != arity:
        raise ValueError(f"{family} needs exactly {arity} parameter(s)")
    return cls(*args)


__all__ = [
    "Group",
    "group_from_string",
    "semigroup_closure",
    "FreeGroup",
    "FreeAbelianGroup",
    "BraidGroup",
    "TararinGroup",
    "BaumslagSolitarGroup",
    "TorusKnotGroup",
    "HeisenbergGroup",
    "SL3ZGroup",
    "PromislowGroup",
    "WreathGroup",
    "ThompsonFGroup",
]

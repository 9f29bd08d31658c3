"""
Finite strict double categories.

Horizontal morphisms compose with ``hcomp[(b, a)] = b∘a``; vertical ones with
``vcomp[(v, u)] = v∘u``. A square has a boundary ``(top, bottom, left,
right)``: top and bottom are horizontal, left and right vertical, with

    src(top) = src(left)      tgt(top) = src(right)
    src(bottom) = tgt(left)   tgt(bottom) = tgt(right)

``hcomp_sq[(t, s)]`` glues ``s`` to the left of ``t`` (``s.right = t.left``)
and ``vcomp_sq[(t, s)]`` glues ``s`` above ``t`` (``s.bottom = t.top``).
``hid_sq[u]`` is the identity square on a vertical ``u`` (left = right = u)
and ``vid_sq[a]`` the one on a horizontal ``a`` (top = bottom = a).

"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterator, Mapping, Optional, Tuple

from dblcat.core.fincat import FinCat
from dblcat.core.order import ordered
from dblcat.types import Boundary, Id, Pair

__all__ = ["FinDblCat"]


@dataclass(frozen=True)
class FinDblCat:
    objects: Tuple[Id, ...]
    hsrc: Mapping[Id, Id]
    htgt: Mapping[Id, Id]
    hid: Mapping[Id, Id]
    hcomp: Mapping[Pair, Id]
    vsrc: Mapping[Id, Id]
    vtgt: Mapping[Id, Id]
    vid: Mapping[Id, Id]
    vcomp: Mapping[Pair, Id]
    top: Mapping[Id, Id]
    bottom: Mapping[Id, Id]
    left: Mapping[Id, Id]
    right: Mapping[Id, Id]
    hcomp_sq: Mapping[Pair, Id]
    vcomp_sq: Mapping[Pair, Id]
    hid_sq: Mapping[Id, Id]
    vid_sq: Mapping[Id, Id]
    name: str = field(default="", compare=False)

    _TABLES = ("hsrc", "htgt", "hid", "hcomp", "vsrc", "vtgt", "vid", "vcomp",
               "top", "bottom", "left", "right", "hcomp_sq", "vcomp_sq",
               "hid_sq", "vid_sq")

    def __post_init__(self):
        object.__setattr__(self, "objects", ordered(self.objects))
        for attr in self._TABLES:
            object.__setattr__(self, attr, dict(getattr(self, attr)))

    @cached_property
    def hmor(self) -> Tuple[Id, ...]:
        return ordered(self.hsrc)

    @cached_property
    def vmor(self) -> Tuple[Id, ...]:
        return ordered(self.vsrc)

    @cached_property
    def squares(self) -> Tuple[Id, ...]:
        return ordered(self.top)

    @cached_property
    def horizontal_cat(self) -> FinCat:
        return FinCat(self.objects, self.hsrc, self.htgt, self.hid, self.hcomp,
                      name="h({})".format(self.name))

    @cached_property
    def vertical_cat(self) -> FinCat:
        return FinCat(self.objects, self.vsrc, self.vtgt, self.vid, self.vcomp,
                      name="v({})".format(self.name))

    @cached_property
    def _by_boundary(self) -> Dict[Boundary, Tuple[Id, ...]]:
        index: Dict[Boundary, list] = {}
        for s in self.squares:
            index.setdefault(self.boundary(s), []).append(s)
        return {key: tuple(val) for key, val in index.items()}

    @cached_property
    def _hhom(self) -> Dict[Pair, Tuple[Id, ...]]:
        homs: Dict[Pair, list] = {}
        for a in self.hmor:
            homs.setdefault((self.hsrc[a], self.htgt[a]), []).append(a)
        return {key: tuple(val) for key, val in homs.items()}

    @cached_property
    def _vhom(self) -> Dict[Pair, Tuple[Id, ...]]:
        homs: Dict[Pair, list] = {}
        for u in self.vmor:
            homs.setdefault((self.vsrc[u], self.vtgt[u]), []).append(u)
        return {key: tuple(val) for key, val in homs.items()}

    def hhom(self, a: Id, b: Id) -> Tuple[Id, ...]:
        return self._hhom.get((a, b), ())

    def vhom(self, a: Id, b: Id) -> Tuple[Id, ...]:
        return self._vhom.get((a, b), ())

    def boundary(self, s: Id) -> Boundary:
        return (self.top[s], self.bottom[s], self.left[s], self.right[s])

    def with_boundary(self, top: Id, bottom: Id, left: Id, right: Id) -> Tuple[Id, ...]:
        """Squares with exactly this boundary, canonical order, no checks."""
        return self._by_boundary.get((top, bottom, left, right), ())

    def corners_agree(self, top: Id, bottom: Id, left: Id, right: Id) -> bool:
        return (self.hsrc[top] == self.vsrc[left]
                and self.htgt[top] == self.vsrc[right]
                and self.hsrc[bottom] == self.vtgt[left]
                and self.htgt[bottom] == self.vtgt[right])

    def hcompose(self, *chain: Id) -> Id:
        result = chain[-1]
        for a in reversed(chain[:-1]):
            result = self.hcomp[(a, result)]
        return result

    def vcompose(self, *chain: Id) -> Id:
        result = chain[-1]
        for u in reversed(chain[:-1]):
            result = self.vcomp[(u, result)]
        return result

    def hcompose_sq(self, *chain: Id) -> Id:
        """Squares listed right to left: ``hcompose_sq(t, s)`` has s on the left."""
        result = chain[-1]
        for s in reversed(chain[:-1]):
            result = self.hcomp_sq[(s, result)]
        return result

    def vcompose_sq(self, *chain: Id) -> Id:
        """Squares listed bottom to top: ``vcompose_sq(t, s)`` has s above."""
        result = chain[-1]
        for s in reversed(chain[:-1]):
            result = self.vcomp_sq[(s, result)]
        return result

    def double_identity(self, x: Id) -> Id:
        return self.hid_sq[self.vid[x]]

    def is_globular(self, s: Id) -> bool:
        """Both vertical sides are identities."""
        return (self.left[s] == self.vid[self.vsrc[self.left[s]]]
                and self.right[s] == self.vid[self.vsrc[self.right[s]]])

    def globular(self, a: Id, b: Id) -> Tuple[Id, ...]:
        """Squares ``a ⇒ b`` with identity vertical sides."""
        if self.hsrc[a] != self.hsrc[b] or self.htgt[a] != self.htgt[b]:
            return ()
        return self.with_boundary(a, b, self.vid[self.hsrc[a]],
                                  self.vid[self.htgt[a]])

    def vertical_inverse(self, s: Id) -> Optional[Id]:
        """A square with top and bottom swapped whose vertical composites
        with ``s`` are the vertical identity squares, or None."""
        top, bottom, left, right = self.boundary(s)
        if not self.is_globular(s):
            return None
        for t in self.with_boundary(bottom, top, left, right):
            if self.vcomp_sq.get((t, s)) == self.vid_sq[top] \
                    and self.vcomp_sq.get((s, t)) == self.vid_sq[bottom]:
                return t
        return None

    def hcomposable_sq(self) -> Iterator[Pair]:
        for s in self.squares:
            for t in self.squares:
                if self.right[s] == self.left[t]:
                    yield (t, s)

    def vcomposable_sq(self) -> Iterator[Pair]:
        for s in self.squares:
            for t in self.squares:
                if self.bottom[s] == self.top[t]:
                    yield (t, s)

    def size(self) -> Dict[str, int]:
        return {"objects": len(self.objects), "hmor": len(self.hmor),
                "vmor": len(self.vmor), "squares": len(self.squares)}

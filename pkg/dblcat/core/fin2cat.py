"""
Finite strict 2-categories.

Conventions:

* ``comp[(g, f)] = g∘f`` on 1-cells.
* ``vcomp[(b, a)] = b·a`` for ``a: f ⇒ g`` and ``b: g ⇒ h``.
* ``hcomp[(b, a)] = b*a`` for ``a: f ⇒ g`` between ``A → B`` and
  ``b: h ⇒ k`` between ``B → C``; the result is ``h∘f ⇒ k∘g``.

"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterator, Mapping, Optional, Tuple

from dblcat.core.fincat import FinCat
from dblcat.core.order import ordered
from dblcat.types import Id, Pair

__all__ = ["Fin2Cat"]


@dataclass(frozen=True)
class Fin2Cat:
    objects: Tuple[Id, ...]
    src: Mapping[Id, Id]
    tgt: Mapping[Id, Id]
    identity: Mapping[Id, Id]
    comp: Mapping[Pair, Id]
    msrc: Mapping[Id, Id]
    mtgt: Mapping[Id, Id]
    id2: Mapping[Id, Id]
    vcomp: Mapping[Pair, Id]
    hcomp: Mapping[Pair, Id]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "objects", ordered(self.objects))
        for attr in ("src", "tgt", "identity", "comp",
                     "msrc", "mtgt", "id2", "vcomp", "hcomp"):
            object.__setattr__(self, attr, dict(getattr(self, attr)))

    @cached_property
    def morphisms(self) -> Tuple[Id, ...]:
        return ordered(self.src)

    @cached_property
    def twocells(self) -> Tuple[Id, ...]:
        return ordered(self.msrc)

    @cached_property
    def underlying(self) -> FinCat:
        """The underlying 1-category."""
        return FinCat(self.objects, self.src, self.tgt, self.identity,
                      self.comp, name=self.name)

    @cached_property
    def _homs(self) -> Dict[Pair, Tuple[Id, ...]]:
        homs: Dict[Pair, list] = {}
        for m in self.morphisms:
            homs.setdefault((self.src[m], self.tgt[m]), []).append(m)
        return {key: tuple(val) for key, val in homs.items()}

    @cached_property
    def _cells(self) -> Dict[Pair, Tuple[Id, ...]]:
        cells: Dict[Pair, list] = {}
        for c in self.twocells:
            cells.setdefault((self.msrc[c], self.mtgt[c]), []).append(c)
        return {key: tuple(val) for key, val in cells.items()}

    def hom(self, a: Id, b: Id) -> Tuple[Id, ...]:
        return self._homs.get((a, b), ())

    def cells(self, f: Id, g: Id) -> Tuple[Id, ...]:
        """The 2-cells ``f ⇒ g``."""
        return self._cells.get((f, g), ())

    def compose(self, *chain: Id) -> Id:
        result = chain[-1]
        for m in reversed(chain[:-1]):
            result = self.comp[(m, result)]
        return result

    def vcompose(self, *chain: Id) -> Id:
        result = chain[-1]
        for c in reversed(chain[:-1]):
            result = self.vcomp[(c, result)]
        return result

    def hcompose(self, *chain: Id) -> Id:
        result = chain[-1]
        for c in reversed(chain[:-1]):
            result = self.hcomp[(c, result)]
        return result

    def whisker_left(self, h: Id, cell: Id) -> Id:
        """``h * cell``: postcompose a 2-cell with the 1-cell ``h``."""
        return self.hcomp[(self.id2[h], cell)]

    def whisker_right(self, cell: Id, f: Id) -> Id:
        """``cell * f``: precompose a 2-cell with the 1-cell ``f``."""
        return self.hcomp[(cell, self.id2[f])]

    def cell_src(self, cell: Id) -> Id:
        """The source object of the 1-cells bounding ``cell``."""
        return self.src[self.msrc[cell]]

    def cell_tgt(self, cell: Id) -> Id:
        return self.tgt[self.msrc[cell]]

    def vcomposable(self) -> Iterator[Pair]:
        for a in self.twocells:
            for b in self.cells_from(self.mtgt[a]):
                yield (b, a)

    def hcomposable(self) -> Iterator[Pair]:
        for a in self.twocells:
            for b in self.twocells:
                if self.cell_tgt(a) == self.cell_src(b):
                    yield (b, a)

    def cells_from(self, f: Id) -> Tuple[Id, ...]:
        return tuple(c for c in self.twocells if self.msrc[c] == f)

    def inverse2(self, cell: Id) -> Optional[Id]:
        """The vertical inverse of ``cell``, or None."""
        f, g = self.msrc[cell], self.mtgt[cell]
        for other in self.cells(g, f):
            if self.vcomp.get((other, cell)) == self.id2[f] \
                    and self.vcomp.get((cell, other)) == self.id2[g]:
                return other
        return None

    def is_invertible2(self, cell: Id) -> bool:
        return self.inverse2(cell) is not None

    def hom_cat(self, a: Id, b: Id) -> FinCat:
        """The hom-category ``A(a, b)``: 1-cells and 2-cells between them."""
        objs = self.hom(a, b)
        arrows = [c for f in objs for g in objs for c in self.cells(f, g)]
        return FinCat(
            objects=objs,
            src={c: self.msrc[c] for c in arrows},
            tgt={c: self.mtgt[c] for c in arrows},
            identity={f: self.id2[f] for f in objs},
            comp={(d, c): self.vcomp[(d, c)]
                  for c in arrows for d in arrows
                  if self.mtgt[c] == self.msrc[d]},
            name="{}({},{})".format(self.name, a, b),
        )

    def size(self) -> Dict[str, int]:
        return {"objects": len(self.objects),
                "morphisms": len(self.morphisms),
                "twocells": len(self.twocells)}

    @classmethod
    def locally_discrete(cls, cat: FinCat, name: str = "") -> "Fin2Cat":
        """The 2-category with only identity 2-cells; ``id2(f)`` is named ``f``."""
        return cls(
            objects=cat.objects,
            src=cat.src,
            tgt=cat.tgt,
            identity=cat.identity,
            comp=cat.comp,
            msrc={f: f for f in cat.morphisms},
            mtgt={f: f for f in cat.morphisms},
            id2={f: f for f in cat.morphisms},
            vcomp={(f, f): f for f in cat.morphisms},
            hcomp=dict(cat.comp),
            name=name or cat.name,
        )

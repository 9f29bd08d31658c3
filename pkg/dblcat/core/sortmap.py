"""Per-sort id maps carrying canonical isomorphisms between structures."""
from dataclasses import dataclass, field
from typing import Mapping, Union

from dblcat.core.fin2cat import Fin2Cat
from dblcat.core.findblcat import FinDblCat

__all__ = ["SortMap", "transport"]


@dataclass(frozen=True)
class SortMap:
    """``morphisms`` is the 1-cell (resp. horizontal) component and ``cells``
    the 2-cell (resp. square) component; ``vmor`` is empty for 2-categories."""

    objects: Mapping = field(default_factory=dict)
    morphisms: Mapping = field(default_factory=dict)
    cells: Mapping = field(default_factory=dict)
    vmor: Mapping = field(default_factory=dict)

    def __post_init__(self):
        for attr in ("objects", "morphisms", "cells", "vmor"):
            object.__setattr__(self, attr, dict(getattr(self, attr)))

    def inverse(self) -> "SortMap":
        return SortMap(
            objects={v: k for k, v in self.objects.items()},
            morphisms={v: k for k, v in self.morphisms.items()},
            cells={v: k for k, v in self.cells.items()},
            vmor={v: k for k, v in self.vmor.items()},
        )

    def then(self, other: "SortMap") -> "SortMap":
        """Apply ``self`` first, then ``other``."""
        return SortMap(
            objects={k: other.objects[v] for k, v in self.objects.items()},
            morphisms={k: other.morphisms[v] for k, v in self.morphisms.items()},
            cells={k: other.cells[v] for k, v in self.cells.items()},
            vmor={k: other.vmor[v] for k, v in self.vmor.items()},
        )

    @classmethod
    def identity(cls, structure: Union[Fin2Cat, FinDblCat]) -> "SortMap":
        if isinstance(structure, FinDblCat):
            return cls(
                objects={x: x for x in structure.objects},
                morphisms={a: a for a in structure.hmor},
                cells={s: s for s in structure.squares},
                vmor={u: u for u in structure.vmor},
            )
        return cls(
            objects={x: x for x in structure.objects},
            morphisms={f: f for f in structure.morphisms},
            cells={c: c for c in structure.twocells},
        )


def transport(structure: Union[Fin2Cat, FinDblCat], m: SortMap,
              name: str = "") -> Union[Fin2Cat, FinDblCat]:
    """Rename every id of ``structure`` along the bijections of ``m``."""
    o, h, c = m.objects, m.morphisms, m.cells
    name = name or structure.name

    def rekey(keys, vals, table):
        return {keys[k]: vals[v] for k, v in table.items()}

    def rekey_pairs(keys, table):
        return {(keys[a], keys[b]): keys[v] for (a, b), v in table.items()}

    if isinstance(structure, Fin2Cat):
        s = structure
        return Fin2Cat(
            objects=[o[x] for x in s.objects],
            src=rekey(h, o, s.src), tgt=rekey(h, o, s.tgt),
            identity=rekey(o, h, s.identity), comp=rekey_pairs(h, s.comp),
            msrc=rekey(c, h, s.msrc), mtgt=rekey(c, h, s.mtgt),
            id2=rekey(h, c, s.id2),
            vcomp=rekey_pairs(c, s.vcomp), hcomp=rekey_pairs(c, s.hcomp),
            name=name,
        )
    s, v = structure, m.vmor
    return FinDblCat(
        objects=[o[x] for x in s.objects],
        hsrc=rekey(h, o, s.hsrc), htgt=rekey(h, o, s.htgt),
        hid=rekey(o, h, s.hid), hcomp=rekey_pairs(h, s.hcomp),
        vsrc=rekey(v, o, s.vsrc), vtgt=rekey(v, o, s.vtgt),
        vid=rekey(o, v, s.vid), vcomp=rekey_pairs(v, s.vcomp),
        top=rekey(c, h, s.top), bottom=rekey(c, h, s.bottom),
        left=rekey(c, v, s.left), right=rekey(c, v, s.right),
        hcomp_sq=rekey_pairs(c, s.hcomp_sq), vcomp_sq=rekey_pairs(c, s.vcomp_sq),
        hid_sq=rekey(v, c, s.hid_sq), vid_sq=rekey(h, c, s.vid_sq),
        name=name,
    )

"""Finite type Hopf G-algebras over exact cyclotomic scalars.

An algebra is stored by structure constants: densely indexed bases per
group grade, sparsely valued maps for product, unit, coproduct, counit,
antipode, crossing, and the grade-1 universal R-matrix.  Everything here
is exact; axiom verification is exhaustive over basis tuples, which is
fine at desk scale (grade dimensions up to ~16).
"""

from __future__ import annotations

from .cyclo import Cyclo
from .groups import FiniteGroup, GroupElement


class AlgebraStructureError(ValueError):
    """Raised when structure constants are dimensionally inconsistent."""


class IntegralError(RuntimeError):
    """Raised when integral solving contradicts the expected structure."""


class DrinfeldError(RuntimeError):
    """Raised when ribbon certification of the Drinfeld element fails."""


# ---------------------------------------------------------------------------
# graded vectors and tensors


def _clean(raw: dict) -> dict:
    return {k: v for k, v in raw.items() if v}


class GradedVector:
    """A sparse element of one grade H_alpha: {basis index: Cyclo}."""

    __slots__ = ("grade", "entries")

    def __init__(self, grade: GroupElement, entries: dict):
        self.grade = grade
        self.entries = _clean(entries)

    def is_zero(self) -> bool:
        return not self.entries

    def scaled(self, c) -> "GradedVector":
        return GradedVector(self.grade, {i: v * c for i, v in self.entries.items()})

    def __add__(self, other: "GradedVector") -> "GradedVector":
        if other.grade != self.grade:
            raise AlgebraStructureError("adding vectors of different grades")
        out = dict(self.entries)
        for i, v in other.entries.items():
            w = out.get(i)
            w = v if w is None else w + v
            if w:
                out[i] = w
            elif i in out:
                del out[i]
        return GradedVector(self.grade, out)

    def __sub__(self, other: "GradedVector") -> "GradedVector":
        return self + other.scaled(-1)

    def __eq__(self, other):
        return (
            isinstance(other, GradedVector)
            and other.grade == self.grade
            and other.entries == self.entries
        )

    __hash__ = None

    def __repr__(self):
        inner = " + ".join(f"({v})*e{i}" for i, v in sorted(self.entries.items())) or "0"
        return f"<{inner} @ {self.grade.name}>"


class GradedTensor:
    """A sparse element of H_{g1} x ... x H_{gk}: {index tuple: Cyclo}."""

    __slots__ = ("grades", "entries")

    def __init__(self, grades: tuple, entries: dict):
        self.grades = tuple(grades)
        self.entries = _clean(entries)

    @property
    def arity(self) -> int:
        return len(self.grades)

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        return (
            isinstance(other, GradedTensor)
            and other.grades == self.grades
            and other.entries == self.entries
        )

    __hash__ = None

    def __repr__(self):
        return f"<GradedTensor {tuple(g.name for g in self.grades)}, {len(self.entries)} terms>"


# ---------------------------------------------------------------------------
# the algebra


class HopfGAlgebra:
    """Structure-constant model of a finite type Hopf G-algebra.

    Internal layout (grade = element index into the group table):
      dims[a]                      dimension of H_a
      product[(a,b)][(i,j)]        sparse target vector in H_{ab}
      unit                         sparse vector in H_1
      coproduct[a][i]              sparse 2-tensor {(p,q): c} in H_a (x) H_a
      counit[a][i]                 Cyclo
      antipode[a][i]               sparse vector in H_{a^{-1}}
      crossing[(b,a)][i]           sparse vector in H_{bab^{-1}}
      rmatrix[(i,j)]               Cyclo, element of H_1 (x) H_1

    Construction validates dimensional consistency, totality of all maps,
    scalar conductors, and that the supported grades form a subgroup.
    """

    def __init__(self, group: FiniteGroup, dims, conductor: int, product, unit,
                 coproduct, counit, antipode, crossing, rmatrix,
                 basis_names=None, name: str | None = None):
        self.group = group
        self.dims = tuple(int(x) for x in dims)
        self.conductor = int(conductor)
        self.product = product
        self.unit = _clean(unit)
        self.coproduct = coproduct
        self.counit = counit
        self.antipode = antipode
        self.crossing = crossing
        self.rmatrix = _clean(rmatrix)
        self.basis_names = basis_names
        self.name = name
        self._validate_structure()

    # -- structural validation (load errors, before any axiom checking) ----

    def _validate_structure(self):
        G = self.group
        if len(self.dims) != G.order:
            raise AlgebraStructureError("dims length does not match group order")
        if any(d < 0 for d in self.dims):
            raise AlgebraStructureError("negative grade dimension")
        if self.conductor < 1:
            raise AlgebraStructureError("conductor must be positive")

        e = G.identity_index
        support = [a for a in range(G.order) if self.dims[a] > 0]
        if e not in support:
            raise AlgebraStructureError("dim H_1 must be positive")
        sset = set(support)
        for a in support:
            if G.inverses[a] not in sset:
                raise AlgebraStructureError(
                    f"supported grades not closed under inverse at {G.names[a]}")
            for b in support:
                if G.table[a][b] not in sset:
                    raise AlgebraStructureError(
                        f"supported grades not closed under product at "
                        f"({G.names[a]},{G.names[b]})")
        self.support = tuple(support)

        def check_vec(vec: dict, grade: int, what: str):
            for t, v in vec.items():
                if not isinstance(t, int) or not 0 <= t < self.dims[grade]:
                    raise AlgebraStructureError(f"{what}: index {t} out of range")
                if not isinstance(v, Cyclo) or self.conductor % v.n:
                    raise AlgebraStructureError(
                        f"{what}: scalar conductor {getattr(v, 'n', '?')} does not "
                        f"divide declared conductor {self.conductor}")

        check_vec(self.unit, e, "unit")
        if not self.unit:
            raise AlgebraStructureError("unit vector is zero")

        for a in support:
            for b in support:
                tab = self.product.get((a, b))
                ab = G.table[a][b]
                if tab is None:
                    raise AlgebraStructureError(
                        f"product table missing for grades ({G.names[a]},{G.names[b]})")
                for i in range(self.dims[a]):
                    for j in range(self.dims[b]):
                        if (i, j) not in tab:
                            raise AlgebraStructureError(
                                f"product undefined at grades ({G.names[a]},{G.names[b]}) "
                                f"basis ({i},{j})")
                        check_vec(tab[(i, j)], ab, "product")

        for a in support:
            if len(self.coproduct[a]) != self.dims[a]:
                raise AlgebraStructureError(f"coproduct not total on grade {G.names[a]}")
            if len(self.counit[a]) != self.dims[a]:
                raise AlgebraStructureError(f"counit not total on grade {G.names[a]}")
            if len(self.antipode[a]) != self.dims[a]:
                raise AlgebraStructureError(f"antipode not total on grade {G.names[a]}")
            ainv = G.inverses[a]
            for i in range(self.dims[a]):
                for (p, q), v in self.coproduct[a][i].items():
                    if not (0 <= p < self.dims[a] and 0 <= q < self.dims[a]):
                        raise AlgebraStructureError(
                            f"coproduct index out of range on grade {G.names[a]}")
                    check_vec({p: v}, a, "coproduct")
                check_vec(self.antipode[a][i], ainv, "antipode")
                v = self.counit[a][i]
                if not isinstance(v, Cyclo) or self.conductor % v.n:
                    raise AlgebraStructureError("counit scalar with bad conductor")
            for b in range(G.order):
                phi = self.crossing.get((b, a))
                if phi is None or len(phi) != self.dims[a]:
                    raise AlgebraStructureError(
                        f"crossing missing for (beta,alpha)=({G.names[b]},{G.names[a]})")
                target = G.conj(b, a)
                for i in range(self.dims[a]):
                    check_vec(phi[i], target, "crossing")

        for (i, j), v in self.rmatrix.items():
            check_vec({i: v}, e, "rmatrix")
            check_vec({j: v}, e, "rmatrix")

    # -- basic access --------------------------------------------------------

    def grade_of(self, index: int) -> GroupElement:
        return self.group.element(index)

    def dim(self, grade) -> int:
        return self.dims[grade.index if isinstance(grade, GroupElement) else grade]

    def basis_vector(self, grade, i: int) -> GradedVector:
        g = grade if isinstance(grade, GroupElement) else self.group.element(grade)
        if not 0 <= i < self.dims[g.index]:
            raise AlgebraStructureError(f"basis index {i} out of range in grade {g.name}")
        return GradedVector(g, {i: Cyclo.one(self.conductor)})

    def unit_vec(self) -> GradedVector:
        return GradedVector(self.group.identity, dict(self.unit))

    def basis_name(self, grade_idx: int, i: int) -> str:
        if self.basis_names is not None:
            return self.basis_names[grade_idx][i]
        return f"e{i}"

    def one(self):
        return Cyclo.one(self.conductor)

    def zero(self):
        return Cyclo.zero(self.conductor)

    # -- raw sparse kernels (dicts in, dicts out) ----------------------------

    def mul_raw(self, a: int, b: int, x: dict, y: dict) -> dict:
        tab = self.product[(a, b)]
        out: dict = {}
        for i, xi in x.items():
            for j, yj in y.items():
                target = tab[(i, j)]
                if not target:
                    continue
                c = xi * yj
                for t, tv in target.items():
                    acc = out.get(t)
                    v = c * tv if acc is None else acc + c * tv
                    if v:
                        out[t] = v
                    elif acc is not None:
                        del out[t]
        return out

    def antipode_raw(self, a: int, x: dict) -> dict:
        rows = self.antipode[a]
        out: dict = {}
        for i, xi in x.items():
            for t, tv in rows[i].items():
                acc = out.get(t)
                v = xi * tv if acc is None else acc + xi * tv
                if v:
                    out[t] = v
                elif acc is not None:
                    del out[t]
        return out

    def crossing_raw(self, b: int, a: int, x: dict) -> dict:
        rows = self.crossing[(b, a)]
        out: dict = {}
        for i, xi in x.items():
            for t, tv in rows[i].items():
                acc = out.get(t)
                v = xi * tv if acc is None else acc + xi * tv
                if v:
                    out[t] = v
                elif acc is not None:
                    del out[t]
        return out

    def counit_raw(self, a: int, x: dict) -> Cyclo:
        eps = self.counit[a]
        total = Cyclo.zero(self.conductor)
        for i, xi in x.items():
            total = total + xi * eps[i]
        return total

    # -- public vector operations ---------------------------------------------

    def mul(self, x: GradedVector, y: GradedVector) -> GradedVector:
        a, b = x.grade.index, y.grade.index
        target = self.group.element(self.group.table[a][b])
        return GradedVector(target, self.mul_raw(a, b, x.entries, y.entries))

    def apply_antipode(self, x: GradedVector) -> GradedVector:
        a = x.grade.index
        return GradedVector(x.grade.inv, self.antipode_raw(a, x.entries))

    def apply_crossing(self, beta: GroupElement, x: GradedVector) -> GradedVector:
        a = x.grade.index
        target = self.group.element(self.group.conj(beta.index, a))
        return GradedVector(target, self.crossing_raw(beta.index, a, x.entries))

    def eval_counit(self, x: GradedVector) -> Cyclo:
        return self.counit_raw(x.grade.index, x.entries)

    def coproduct_power(self, x: GradedVector, nfactors: int) -> GradedTensor:
        """Delta^{(nfactors-1)}(x) as an nfactors-fold tensor; nfactors=1 is x."""
        if nfactors < 1:
            raise ValueError("nfactors must be >= 1")
        a = x.grade.index
        entries = {(i,): v for i, v in x.entries.items()}
        delta = self.coproduct[a]
        for _ in range(nfactors - 1):
            # split the last slot; coassociativity makes the choice irrelevant
            nxt: dict = {}
            for idxs, v in entries.items():
                for (p, q), dv in delta[idxs[-1]].items():
                    key = idxs[:-1] + (p, q)
                    acc = nxt.get(key)
                    w = v * dv if acc is None else acc + v * dv
                    if w:
                        nxt[key] = w
                    elif acc is not None:
                        del nxt[key]
            entries = nxt
        return GradedTensor((x.grade,) * nfactors, entries)

    def r_tensor(self) -> GradedTensor:
        e = self.group.identity
        return GradedTensor((e, e), dict(self.rmatrix))

    def r_inverse_tensor(self) -> GradedTensor:
        """(S_1 (x) id)(R), the two-sided inverse of R for a valid algebra."""
        e = self.group.identity_index
        out: dict = {}
        for (i, j), v in self.rmatrix.items():
            for t, tv in self.antipode[e][i].items():
                key = (t, j)
                acc = out.get(key)
                w = v * tv if acc is None else acc + v * tv
                if w:
                    out[key] = w
                elif acc is not None:
                    del out[key]
        g = self.group.identity
        return GradedTensor((g, g), out)

    # -- equality (used by serialization round-trip tests) --------------------

    def __eq__(self, other):
        if not isinstance(other, HopfGAlgebra):
            return NotImplemented
        return (
            self.group.table == other.group.table
            and self.dims == other.dims
            and self.conductor == other.conductor
            and self.unit == other.unit
            and self.rmatrix == other.rmatrix
            and self.product == other.product
            and self.coproduct == other.coproduct
            and self.counit == other.counit
            and self.antipode == other.antipode
            and self.crossing == other.crossing
        )

    __hash__ = None

    def __repr__(self):
        return f"HopfGAlgebra({self.name or 'custom'}, |G|={self.group.order}, dims={self.dims})"


# ---------------------------------------------------------------------------
# tensor helpers (module level; they need the algebra for products)


def tensor_mul(H: HopfGAlgebra, s: GradedTensor, t: GradedTensor) -> GradedTensor:
    """Slotwise product of two tensors of equal arity."""
    if s.arity != t.arity:
        raise AlgebraStructureError("tensor arity mismatch")
    ga = tuple(g.index for g in s.grades)
    gb = tuple(g.index for g in t.grades)
    gout, out = _tensor_mul_raw(H, ga, s.entries, gb, t.entries)
    return GradedTensor(tuple(H.group.element(g) for g in gout), out)


def _tensor_mul_raw(H: HopfGAlgebra, ga, sa: dict, gb, sb: dict):
    G = H.group
    gout = tuple(G.table[x][y] for x, y in zip(ga, gb))
    tabs = [H.product[(x, y)] for x, y in zip(ga, gb)]
    out: dict = {}
    for ka, va in sa.items():
        for kb, vb in sb.items():
            partial = [((), va * vb)]
            for p, tab in enumerate(tabs):
                target = tab[(ka[p], kb[p])]
                if not target:
                    partial = []
                    break
                nxt = []
                for idxs, c in partial:
                    for u, uv in target.items():
                        nxt.append((idxs + (u,), c * uv))
                partial = nxt
            for idxs, c in partial:
                acc = out.get(idxs)
                v = c if acc is None else acc + c
                if v:
                    out[idxs] = v
                elif acc is not None:
                    del out[idxs]
    return gout, out


def tensor_apply(H: HopfGAlgebra, t: GradedTensor, pos: int, rows, target_grade: GroupElement) -> GradedTensor:
    """Apply the linear map given by sparse rows to factor pos."""
    out: dict = {}
    for idxs, v in t.entries.items():
        for u, uv in rows[idxs[pos]].items():
            key = idxs[:pos] + (u,) + idxs[pos + 1:]
            acc = out.get(key)
            w = v * uv if acc is None else acc + v * uv
            if w:
                out[key] = w
            elif acc is not None:
                del out[key]
    grades = t.grades[:pos] + (target_grade,) + t.grades[pos + 1:]
    return GradedTensor(grades, out)


def tensor_antipode_at(H: HopfGAlgebra, t: GradedTensor, pos: int) -> GradedTensor:
    g = t.grades[pos]
    return tensor_apply(H, t, pos, H.antipode[g.index], g.inv)


def tensor_swap(t: GradedTensor) -> GradedTensor:
    """Flip a 2-tensor."""
    return GradedTensor(
        (t.grades[1], t.grades[0]), {(j, i): v for (i, j), v in t.entries.items()}
    )


def embed_two_tensor(H: HopfGAlgebra, t: GradedTensor, pos1: int, pos2: int, arity: int) -> GradedTensor:
    """Place a grade-(1,1) 2-tensor at slots pos1 < pos2 with units elsewhere."""
    e = H.group.identity
    unit_items = list(H.unit.items())
    out: dict = {}
    rest = [p for p in range(arity) if p not in (pos1, pos2)]
    for (i, j), v in t.entries.items():
        stack = [({pos1: i, pos2: j}, v)]
        for p in rest:
            stack = [
                ({**placed, p: u}, c * uv)
                for placed, c in stack
                for u, uv in unit_items
            ]
        for placed, c in stack:
            key = tuple(placed[p] for p in range(arity))
            acc = out.get(key)
            w = c if acc is None else acc + c
            if w:
                out[key] = w
            elif acc is not None:
                del out[key]
    return GradedTensor((e,) * arity, out)


def format_scalar(v: Cyclo) -> str:
    from .cyclo import render_scalar

    return render_scalar(v)


def format_vector(H: HopfGAlgebra, x: GradedVector) -> str:
    if x.is_zero():
        return "0"
    a = x.grade.index
    parts = []
    for i, v in sorted(x.entries.items()):
        parts.append(f"({format_scalar(v)})*{H.basis_name(a, i)}")
    return " + ".join(parts)

"""Combinatorial planar Kirby diagrams and G-colorings.

A diagram is a set of dotted components (1-handles), undotted framed
components (2-handles, blackboard framing), explicit crossing signs, and
recorded 3-/4-handle counts.  Undotted components store their events in
traversal order; dotted components list their passage points from left
to right across the spanning disk as (undotted id, event position)
references.  Planar realizability is trusted, not checked.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import FiniteGroup, GroupElement, GroupHom, Presentation, enumerate_homs


class DiagramError(ValueError):
    """Raised for structurally broken diagrams or bad references."""


class ColoringError(ValueError):
    """Raised when a coloring violates a component relation."""


@dataclass(frozen=True)
class CrossingEnd:
    crossing: int
    over: bool

    def __repr__(self):
        return f"{'O' if self.over else 'U'}(c{self.crossing})"


@dataclass(frozen=True)
class DotPassage:
    dot: int
    down: bool

    def __repr__(self):
        return f"D(x{self.dot},{'down' if self.down else 'up'})"


@dataclass(frozen=True)
class Crossing:
    id: int
    positive: bool


@dataclass(frozen=True)
class DottedComponent:
    id: int
    passages: tuple  # of (undotted id, event position), left to right


@dataclass(frozen=True)
class UndottedComponent:
    id: int
    events: tuple  # of CrossingEnd | DotPassage, in traversal order


@dataclass(frozen=True)
class KirbyDiagram:
    dotted: tuple
    undotted: tuple
    crossings: tuple
    h3: int = 0
    h4: int = 1

    def dotted_by_id(self, did: int) -> DottedComponent:
        for x in self.dotted:
            if x.id == did:
                return x
        raise DiagramError(f"no dotted component {did}")

    def undotted_by_id(self, uid: int) -> UndottedComponent:
        for u in self.undotted:
            if u.id == uid:
                return u
        raise DiagramError(f"no undotted component {uid}")

    def crossing_by_id(self, cid: int) -> Crossing:
        for c in self.crossings:
            if c.id == cid:
                return c
        raise DiagramError(f"no crossing {cid}")


@dataclass
class ColoredDiagram:
    diagram: KirbyDiagram
    colors: dict  # dotted id -> GroupElement

    def color_of(self, did: int) -> GroupElement:
        return self.colors[did]

    def __eq__(self, other):
        return (
            isinstance(other, ColoredDiagram)
            and other.diagram == self.diagram
            and other.colors == self.colors
        )


def validate(d: KirbyDiagram):
    """Referential-integrity report: empty list means the diagram is sound."""
    problems = []
    uids = [u.id for u in d.undotted]
    dids = [x.id for x in d.dotted]
    cids = [c.id for c in d.crossings]
    if len(set(uids)) != len(uids):
        problems.append("duplicate undotted component ids")
    if len(set(dids)) != len(dids):
        problems.append("duplicate dotted component ids")
    if len(set(cids)) != len(cids):
        problems.append("duplicate crossing ids")
    if d.h3 < 0 or d.h4 < 0:
        problems.append("negative handle count")

    crossing_roles = {c.id: [] for c in d.crossings}
    dot_events = {}
    for u in d.undotted:
        for pos, ev in enumerate(u.events):
            if isinstance(ev, CrossingEnd):
                if ev.crossing not in crossing_roles:
                    problems.append(
                        f"undotted {u.id} references unknown crossing {ev.crossing}")
                else:
                    crossing_roles[ev.crossing].append(ev.over)
            elif isinstance(ev, DotPassage):
                if ev.dot not in set(dids):
                    problems.append(
                        f"undotted {u.id} passes through unknown dot {ev.dot}")
                dot_events[(u.id, pos)] = ev
            else:
                problems.append(f"undotted {u.id} has a malformed event at {pos}")
    for cid, roles in crossing_roles.items():
        if sorted(roles) != [False, True]:
            problems.append(
                f"crossing {cid} needs exactly one over and one under end, "
                f"got {len(roles)} end(s)")

    seen_refs = set()
    for x in d.dotted:
        for ref in x.passages:
            if not (isinstance(ref, tuple) and len(ref) == 2):
                problems.append(f"dot {x.id} has a malformed passage reference")
                continue
            if ref in seen_refs:
                problems.append(f"passage {ref} listed twice")
            seen_refs.add(ref)
            ev = dot_events.get(ref)
            if ev is None:
                problems.append(
                    f"dot {x.id} references {ref}, which is not a dot passage event")
            elif ev.dot != x.id:
                problems.append(
                    f"dot {x.id} references {ref}, which names dot {ev.dot}")
    for ref, ev in dot_events.items():
        if ref not in seen_refs:
            problems.append(
                f"passage event {ref} through dot {ev.dot} is missing from "
                f"that dot's passage list")
    return problems


def require_valid(d: KirbyDiagram):
    problems = validate(d)
    if problems:
        raise DiagramError("; ".join(problems))


def fundamental_presentation(d: KirbyDiagram) -> Presentation:
    """One generator per dotted component (in list order), one relation
    word per undotted component: +g for a downward passage, -g for an
    upward one, in traversal order."""
    gen_index = {x.id: i + 1 for i, x in enumerate(d.dotted)}
    relations = []
    for u in d.undotted:
        word = []
        for ev in u.events:
            if isinstance(ev, DotPassage):
                g = gen_index[ev.dot]
                word.append(g if ev.down else -g)
        relations.append(tuple(word))
    return Presentation(len(d.dotted), tuple(relations))


def color(d: KirbyDiagram, hom: GroupHom) -> ColoredDiagram:
    pres = fundamental_presentation(d)
    if len(hom.images) != pres.num_generators:
        raise ColoringError(
            f"coloring supplies {len(hom.images)} generator images, diagram "
            f"has {pres.num_generators} dotted components")
    for u, word in zip(d.undotted, pres.relations):
        if not hom.word_image(word).is_identity():
            raise ColoringError(
                f"relation of undotted component {u.id} does not map to the "
                f"identity under the coloring")
    colors = {x.id: hom.images[i] for i, x in enumerate(d.dotted)}
    return ColoredDiagram(d, colors)


def colorings(d: KirbyDiagram, G: FiniteGroup):
    """All valid colorings of d by G, in lexicographic hom order."""
    pres = fundamental_presentation(d)
    return [color(d, hom) for hom in enumerate_homs(pres, G)]


# -- reorientation, rotation, renumbering -------------------------------------


def reorient(d: KirbyDiagram, uid: int) -> KirbyDiagram:
    """Reverse one undotted component's orientation.

    Its event list is reversed, its own passage directions flip, and the
    sign of every crossing with exactly one end on it flips.  Passage
    references into it are re-pointed; disk orders are unaffected.
    """
    u = d.undotted_by_id(uid)
    n = len(u.events)
    end_count = {}
    for ev in u.events:
        if isinstance(ev, CrossingEnd):
            end_count[ev.crossing] = end_count.get(ev.crossing, 0) + 1
    flip = {cid for cid, cnt in end_count.items() if cnt == 1}

    new_events = []
    for ev in reversed(u.events):
        if isinstance(ev, DotPassage):
            new_events.append(DotPassage(ev.dot, not ev.down))
        else:
            new_events.append(ev)
    undotted = tuple(
        UndottedComponent(x.id, tuple(new_events)) if x.id == uid else x
        for x in d.undotted
    )
    crossings = tuple(
        Crossing(c.id, not c.positive) if c.id in flip else c for c in d.crossings
    )
    dotted = tuple(
        DottedComponent(
            x.id,
            tuple(
                (ru, n - 1 - rp) if ru == uid else (ru, rp)
                for ru, rp in x.passages
            ),
        )
        for x in d.dotted
    )
    return KirbyDiagram(dotted, undotted, crossings, d.h3, d.h4)


def rotate_component(d: KirbyDiagram, uid: int, r: int) -> KirbyDiagram:
    """Shift the cyclic start point of one undotted component by r."""
    u = d.undotted_by_id(uid)
    n = len(u.events)
    if n == 0:
        return d
    r %= n
    undotted = tuple(
        UndottedComponent(x.id, x.events[r:] + x.events[:r]) if x.id == uid else x
        for x in d.undotted
    )
    dotted = tuple(
        DottedComponent(
            x.id,
            tuple(
                (ru, (rp - r) % n) if ru == uid else (ru, rp)
                for ru, rp in x.passages
            ),
        )
        for x in d.dotted
    )
    return KirbyDiagram(dotted, undotted, d.crossings, d.h3, d.h4)


def renumber(d: KirbyDiagram) -> KirbyDiagram:
    """Relabel all ids densely (0, 1, ...) in list order."""
    umap = {u.id: i for i, u in enumerate(d.undotted)}
    dmap = {x.id: i for i, x in enumerate(d.dotted)}
    cmap = {c.id: i for i, c in enumerate(d.crossings)}

    def remap_event(ev):
        if isinstance(ev, CrossingEnd):
            return CrossingEnd(cmap[ev.crossing], ev.over)
        return DotPassage(dmap[ev.dot], ev.down)

    undotted = tuple(
        UndottedComponent(umap[u.id], tuple(remap_event(ev) for ev in u.events))
        for u in d.undotted
    )
    dotted = tuple(
        DottedComponent(
            dmap[x.id], tuple((umap[ru], rp) for ru, rp in x.passages)
        )
        for x in d.dotted
    )
    crossings = tuple(Crossing(cmap[c.id], c.positive) for c in d.crossings)
    return KirbyDiagram(dotted, undotted, crossings, d.h3, d.h4)


def connected_sum(a: KirbyDiagram, b: KirbyDiagram) -> KirbyDiagram:
    """Disjoint union of two diagrams; handle counts add (one 4-handle)."""
    du, dd, dc = len(a.undotted), len(a.dotted), len(a.crossings)
    amap_u = {u.id: i for i, u in enumerate(a.undotted)}
    amap_d = {x.id: i for i, x in enumerate(a.dotted)}
    amap_c = {c.id: i for i, c in enumerate(a.crossings)}
    bmap_u = {u.id: du + i for i, u in enumerate(b.undotted)}
    bmap_d = {x.id: dd + i for i, x in enumerate(b.dotted)}
    bmap_c = {c.id: dc + i for i, c in enumerate(b.crossings)}

    def remap(d, umap, dmap, cmap):
        def remap_event(ev):
            if isinstance(ev, CrossingEnd):
                return CrossingEnd(cmap[ev.crossing], ev.over)
            return DotPassage(dmap[ev.dot], ev.down)

        und = [
            UndottedComponent(umap[u.id], tuple(remap_event(e) for e in u.events))
            for u in d.undotted
        ]
        dot = [
            DottedComponent(dmap[x.id], tuple((umap[ru], rp) for ru, rp in x.passages))
            for x in d.dotted
        ]
        cro = [Crossing(cmap[c.id], c.positive) for c in d.crossings]
        return dot, und, cro

    da, ua, ca = remap(a, amap_u, amap_d, amap_c)
    db, ub, cb = remap(b, bmap_u, bmap_d, bmap_c)
    return KirbyDiagram(
        tuple(da + db), tuple(ua + ub), tuple(ca + cb),
        a.h3 + b.h3, a.h4 + b.h4 - 1,
    )


# -- builtin diagrams ----------------------------------------------------------


def _cp2(positive: bool) -> KirbyDiagram:
    # +1- or -1-framed unknot: one self-crossing curl
    events = (CrossingEnd(0, True), CrossingEnd(0, False))
    return KirbyDiagram(
        dotted=(),
        undotted=(UndottedComponent(0, events),),
        crossings=(Crossing(0, positive),),
        h3=0,
        h4=1,
    )


def _s2xs2() -> KirbyDiagram:
    # Hopf link, both components 0-framed
    u0 = UndottedComponent(0, (CrossingEnd(0, True), CrossingEnd(1, False)))
    u1 = UndottedComponent(1, (CrossingEnd(0, False), CrossingEnd(1, True)))
    return KirbyDiagram(
        dotted=(),
        undotted=(u0, u1),
        crossings=(Crossing(0, True), Crossing(1, True)),
        h3=0,
        h4=1,
    )


def _s1xs3() -> KirbyDiagram:
    return KirbyDiagram(
        dotted=(DottedComponent(0, ()),),
        undotted=(),
        crossings=(),
        h3=1,
        h4=1,
    )


def _s1xs1xs2() -> KirbyDiagram:
    # two dots, one undotted component tracing the commutator through
    # them, and a second undotted component it clasps
    eta1 = UndottedComponent(0, (
        DotPassage(0, True),
        CrossingEnd(0, False),
        CrossingEnd(1, True),
        DotPassage(1, True),
        DotPassage(0, False),
        DotPassage(1, False),
    ))
    eta2 = UndottedComponent(1, (CrossingEnd(0, True), CrossingEnd(1, False)))
    xi1 = DottedComponent(0, ((0, 0), (0, 4)))
    xi2 = DottedComponent(1, ((0, 5), (0, 3)))
    return KirbyDiagram(
        dotted=(xi1, xi2),
        undotted=(eta1, eta2),
        crossings=(Crossing(0, True), Crossing(1, True)),
        h3=2,
        h4=1,
    )


def _s4() -> KirbyDiagram:
    return KirbyDiagram(dotted=(), undotted=(), crossings=(), h3=0, h4=1)


_BUILTIN_DIAGRAMS = {
    "cp2": lambda: _cp2(True),
    "cp2bar": lambda: _cp2(False),
    "s2xs2": _s2xs2,
    "s1xs3": _s1xs3,
    "s1xs1xs2": _s1xs1xs2,
    "s4": _s4,
}


def builtin_diagram(name: str) -> KirbyDiagram:
    """Resolve a builtin diagram name, including 'connected-sum:A,B'."""
    if name in _BUILTIN_DIAGRAMS:
        return _BUILTIN_DIAGRAMS[name]()
    if name.startswith("connected-sum:"):
        parts = name[len("connected-sum:"):].split(",")
        if len(parts) != 2:
            raise DiagramError("connected-sum takes exactly two diagram names")
        return connected_sum(builtin_diagram(parts[0]), builtin_diagram(parts[1]))
    raise DiagramError(f"unknown builtin diagram {name!r}")


def builtin_diagram_names():
    return tuple(_BUILTIN_DIAGRAMS)

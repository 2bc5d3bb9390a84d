"""Move rewrites on colored Kirby diagrams.

apply_move takes a JSON-style spec dict {"move": name, ...params} and
returns a fresh ColoredDiagram, or raises MoveError when the named site
does not match the move's pattern.  Mechanized moves:

  I-2-insert / I-2-remove   crossing pair creation / cancellation
  I-3                       triple slide across three same-sign crossings
  I-5                       swap the two ends of an adjacent self-crossing
  II-1-insert / II-1-remove pair of opposite passages through one dot
  II-5                      reverse a dot's disk order, invert its color
  II-6                      pass one dot through another, conjugating colors
  III-1-slide / III-1-unslide  handle slide of one dot over another
  III-4-insert / III-4-remove  dot colored 1 with a lone passing strand
  III-5-insert / III-5-remove  bare unknot paired with a 3-handle
  global-conjugate          recolor every dot by a fixed conjugation

Rewrites renumber ids densely; round-trip pairs restore diagrams up to
that renumbering (which is the identity on already-dense inputs).
"""

from __future__ import annotations

from .diagrams import (
    ColoredDiagram,
    Crossing,
    CrossingEnd,
    DiagramError,
    DotPassage,
    DottedComponent,
    KirbyDiagram,
    UndottedComponent,
    require_valid,
)
from .groups import GroupElement


class MoveError(ValueError):
    """The move's pattern does not match at the named site."""


class _Node:
    # one strand event with object identity, so edits survive reindexing
    __slots__ = ("ev",)

    def __init__(self, ev):
        self.ev = ev


class _Editor:
    """Mutable working copy of a colored diagram."""

    def __init__(self, cd: ColoredDiagram):
        d = cd.diagram
        self.h3 = d.h3
        self.h4 = d.h4
        self.signs = {c.id: c.positive for c in d.crossings}
        self.comp_order = [u.id for u in d.undotted]
        self.comp_nodes = {}
        node_at = {}
        for u in d.undotted:
            nodes = [_Node(ev) for ev in u.events]
            self.comp_nodes[u.id] = nodes
            for pos, node in enumerate(nodes):
                node_at[(u.id, pos)] = node
        self.dot_order = [x.id for x in d.dotted]
        self.dot_passages = {
            x.id: [node_at[ref] for ref in x.passages] for x in d.dotted
        }
        self.colors = dict(cd.colors)

    # -- id allocation ---------------------------------------------------

    def new_crossing(self, positive: bool) -> int:
        cid = max(self.signs, default=-1) + 1
        self.signs[cid] = positive
        return cid

    def new_dot(self, color: GroupElement) -> int:
        did = max(self.dot_order, default=-1) + 1
        self.dot_order.append(did)
        self.dot_passages[did] = []
        self.colors[did] = color
        return did

    def new_component(self) -> int:
        uid = max(self.comp_order, default=-1) + 1
        self.comp_order.append(uid)
        self.comp_nodes[uid] = []
        return uid

    # -- queries ----------------------------------------------------------

    def positions(self) -> dict:
        pos = {}
        for uid in self.comp_order:
            for i, node in enumerate(self.comp_nodes[uid]):
                pos[id(node)] = (uid, i)
        return pos

    def crossing_nodes(self, cid: int):
        over = under = None
        for uid in self.comp_order:
            for node in self.comp_nodes[uid]:
                ev = node.ev
                if isinstance(ev, CrossingEnd) and ev.crossing == cid:
                    if ev.over:
                        over = node
                    else:
                        under = node
        if over is None or under is None:
            raise MoveError(f"crossing {cid} not found in the diagram")
        return over, under

    def next_node(self, uid: int, idx: int) -> _Node:
        nodes = self.comp_nodes[uid]
        return nodes[(idx + 1) % len(nodes)]

    def cyclically_adjacent(self, na: _Node, nb: _Node, pos: dict):
        """Return (uid, first-node) if na, nb are consecutive strand events."""
        ua, ia = pos[id(na)]
        ub, ib = pos[id(nb)]
        if ua != ub:
            return None
        n = len(self.comp_nodes[ua])
        if n < 2:
            return None
        if (ia + 1) % n == ib:
            return ua, na
        if (ib + 1) % n == ia:
            return ua, nb
        return None

    # -- freezing ----------------------------------------------------------

    def freeze(self) -> ColoredDiagram:
        cross_ids = sorted(self.signs)
        cmap = {old: new for new, old in enumerate(cross_ids)}
        dmap = {old: new for new, old in enumerate(self.dot_order)}
        umap = {old: new for new, old in enumerate(self.comp_order)}
        node_ref = {}
        undotted = []
        for uid in self.comp_order:
            events = []
            for i, node in enumerate(self.comp_nodes[uid]):
                ev = node.ev
                if isinstance(ev, CrossingEnd):
                    events.append(CrossingEnd(cmap[ev.crossing], ev.over))
                else:
                    events.append(DotPassage(dmap[ev.dot], ev.down))
                node_ref[id(node)] = (umap[uid], i)
            undotted.append(UndottedComponent(umap[uid], tuple(events)))
        dotted = []
        for did in self.dot_order:
            refs = tuple(node_ref[id(node)] for node in self.dot_passages[did])
            dotted.append(DottedComponent(dmap[did], refs))
        crossings = [Crossing(cmap[c], self.signs[c]) for c in cross_ids]
        d = KirbyDiagram(tuple(dotted), tuple(undotted), tuple(crossings),
                         self.h3, self.h4)
        require_valid(d)
        colors = {dmap[did]: self.colors[did] for did in self.dot_order}
        cd = ColoredDiagram(d, colors)
        _check_coloring(cd)
        return cd


def _check_coloring(cd: ColoredDiagram) -> None:
    # every relation word must still map to the group identity
    for u in cd.diagram.undotted:
        acc = None
        for ev in u.events:
            if not isinstance(ev, DotPassage):
                continue
            g = cd.color_of(ev.dot)
            g = g if ev.down else g.inv
            acc = g if acc is None else acc * g
        if acc is not None and not acc.is_identity():
            raise MoveError(
                f"rewrite broke the coloring on undotted component {u.id}")


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise MoveError(msg)


def _dot_entry(ed: _Editor, did, ctx: str) -> int:
    _require(did in ed.dot_passages, f"{ctx}: unknown dotted component {did}")
    return did


def _comp_entry(ed: _Editor, uid, ctx: str) -> int:
    _require(uid in ed.comp_nodes, f"{ctx}: unknown undotted component {uid}")
    return uid


# -- crossing moves -------------------------------------------------------


def _i2_insert(ed: _Editor, spec: dict) -> None:
    ua = _comp_entry(ed, spec["over"], "I-2-insert")
    ub = _comp_entry(ed, spec["under"], "I-2-insert")
    i, j = spec["over_pos"], spec["under_pos"]
    sign = spec.get("sign", "+")
    _require(sign in ("+", "-"), "I-2-insert: sign must be '+' or '-'")
    _require(0 <= i <= len(ed.comp_nodes[ua]), "I-2-insert: over_pos out of range")
    _require(0 <= j <= len(ed.comp_nodes[ub]), "I-2-insert: under_pos out of range")
    _require(ua != ub or i != j,
             "I-2-insert: same-component windows need distinct positions")
    c1 = ed.new_crossing(sign == "+")
    c2 = ed.new_crossing(sign != "+")
    over_block = [_Node(CrossingEnd(c1, True)), _Node(CrossingEnd(c2, True))]
    under_block = [_Node(CrossingEnd(c1, False)), _Node(CrossingEnd(c2, False))]
    if ua == ub:
        # insert at the later position first so the earlier index stays valid
        first, second = ((j, under_block), (i, over_block)) if j > i \
            else ((i, over_block), (j, under_block))
        ed.comp_nodes[ua][first[0]:first[0]] = first[1]
        ed.comp_nodes[ua][second[0]:second[0]] = second[1]
    else:
        ed.comp_nodes[ua][i:i] = over_block
        ed.comp_nodes[ub][j:j] = under_block


def _i2_remove(ed: _Editor, spec: dict) -> None:
    c1, c2 = spec["c1"], spec["c2"]
    _require(c1 != c2, "I-2-remove: needs two distinct crossings")
    _require(c1 in ed.signs and c2 in ed.signs, "I-2-remove: unknown crossing")
    _require(ed.signs[c1] != ed.signs[c2],
             "I-2-remove: crossing signs must be opposite")
    o1, u1 = ed.crossing_nodes(c1)
    o2, u2 = ed.crossing_nodes(c2)
    pos = ed.positions()
    _require(ed.cyclically_adjacent(o1, o2, pos) is not None,
             "I-2-remove: over ends are not adjacent")
    _require(ed.cyclically_adjacent(u1, u2, pos) is not None,
             "I-2-remove: under ends are not adjacent")
    for node in (o1, o2, u1, u2):
        uid, _ = pos[id(node)]
        ed.comp_nodes[uid].remove(node)
    del ed.signs[c1], ed.signs[c2]


def _i3(ed: _Editor, spec: dict) -> None:
    cids = list(spec["crossings"])
    _require(len(cids) == 3 and len(set(cids)) == 3,
             "I-3: needs three distinct crossings")
    for c in cids:
        _require(c in ed.signs, f"I-3: unknown crossing {c}")
    _require(len({ed.signs[c] for c in cids}) == 1,
             "I-3: crossing signs must all agree")
    ends = {}
    order = []
    for c in cids:
        o, u = ed.crossing_nodes(c)
        for node, over in ((o, True), (u, False)):
            ends[id(node)] = (c, over, node)
            order.append(id(node))
    pos = ed.positions()
    pairs = []  # candidate windows: strand-consecutive pairs within the six ends
    for i, ka in enumerate(order):
        for kb in order[i + 1:]:
            na, nb = ends[ka][2], ends[kb][2]
            adj = ed.cyclically_adjacent(na, nb, pos)
            if adj is None:
                continue
            uid, first = adj
            second = nb if first is na else na
            pairs.append((uid, first, second))
            if len(ed.comp_nodes[uid]) == 2:
                # a two-event cycle reads in either order
                pairs.append((uid, second, first))
    windows = _i3_matching(ends, pairs, cids)
    _require(windows is not None,
             "I-3: the six crossing ends admit no valid window matching")
    for uid, first, second in windows:
        nodes = ed.comp_nodes[uid]
        ia, ib = nodes.index(first), nodes.index(second)
        nodes[ia], nodes[ib] = nodes[ib], nodes[ia]


def _i3_matching(ends, pairs, cids):
    """First perfect matching of the six ends into candidate windows that
    realizes the triple-slide pattern, or None."""

    def valid(windows):
        # one all-over, one mixed, one all-under window
        rank_of_window = {}
        for wi, (_, first, second) in enumerate(windows):
            n_over = sum(1 for node in (first, second) if ends[id(node)][1])
            rank_of_window[wi] = {2: 1, 1: 2, 0: 3}[n_over]
        if sorted(rank_of_window.values()) != [1, 2, 3]:
            return False
        window_of = {}
        for wi, (_, first, second) in enumerate(windows):
            for node in (first, second):
                c, over, _ = ends[id(node)]
                window_of[(c, over)] = wi
        for c in cids:
            if window_of[(c, True)] == window_of[(c, False)]:
                return False
        configs = set()
        for wi, (_, first, second) in enumerate(windows):
            ranks = []
            for node in (first, second):
                c, over, _ = ends[id(node)]
                ranks.append(rank_of_window[window_of[(c, not over)]])
            if ranks[0] == ranks[1]:
                return False
            configs.add(ranks[0] > ranks[1])
        return len(configs) == 1

    def search(chosen, used):
        if len(chosen) == 3:
            return list(chosen) if valid(chosen) else None
        for cand in pairs:
            _, first, second = cand
            if id(first) in used or id(second) in used:
                continue
            found = search(chosen + [cand],
                           used | {id(first), id(second)})
            if found is not None:
                return found
        return None

    return search([], set())


def _i5(ed: _Editor, spec: dict) -> None:
    cid = spec["crossing"]
    _require(cid in ed.signs, f"I-5: unknown crossing {cid}")
    over, under = ed.crossing_nodes(cid)
    pos = ed.positions()
    adj = ed.cyclically_adjacent(over, under, pos)
    _require(adj is not None, "I-5: crossing ends are not adjacent on one strand")
    uid = pos[id(over)][0]
    _require(uid == pos[id(under)][0], "I-5: not a self-crossing")
    nodes = ed.comp_nodes[uid]
    ia, ib = nodes.index(over), nodes.index(under)
    nodes[ia], nodes[ib] = nodes[ib], nodes[ia]


# -- dot passage moves -----------------------------------------------------


def _ii1_insert(ed: _Editor, spec: dict) -> None:
    did = _dot_entry(ed, spec["dot"], "II-1-insert")
    uid = _comp_entry(ed, spec["component"], "II-1-insert")
    i = spec["disk_pos"]
    p = spec["event_pos"]
    first_down = bool(spec.get("first_down", True))
    _require(0 <= i <= len(ed.dot_passages[did]),
             "II-1-insert: disk_pos out of range")
    _require(0 <= p <= len(ed.comp_nodes[uid]),
             "II-1-insert: event_pos out of range")
    n1 = _Node(DotPassage(did, first_down))
    n2 = _Node(DotPassage(did, not first_down))
    ed.comp_nodes[uid][p:p] = [n1, n2]
    ed.dot_passages[did][i:i] = [n1, n2]


def _ii1_remove(ed: _Editor, spec: dict) -> None:
    did = _dot_entry(ed, spec["dot"], "II-1-remove")
    i = spec["disk_pos"]
    passages = ed.dot_passages[did]
    _require(0 <= i and i + 1 < len(passages),
             "II-1-remove: disk_pos does not name a passage pair")
    na, nb = passages[i], passages[i + 1]
    _require(na.ev.down != nb.ev.down,
             "II-1-remove: passage directions must be opposite")
    pos = ed.positions()
    _require(ed.cyclically_adjacent(na, nb, pos) is not None,
             "II-1-remove: passages are not adjacent on the strand")
    uid = pos[id(na)][0]
    ed.comp_nodes[uid].remove(na)
    ed.comp_nodes[uid].remove(nb)
    del passages[i:i + 2]


def _ii5(ed: _Editor, spec: dict) -> None:
    did = _dot_entry(ed, spec["dot"], "II-5")
    passages = ed.dot_passages[did]
    passages.reverse()
    for node in passages:
        node.ev = DotPassage(did, not node.ev.down)
    ed.colors[did] = ed.colors[did].inv


def _aligned_partners(ed: _Editor, did: int, other: int, after: bool, ctx: str):
    """Partner nodes of `other` aligned with dot `did`'s disk order.

    Every passage of `did` must be Down and be immediately followed
    (after=True) or preceded (after=False) on its strand by a Down
    passage of `other`; partner j must sit at disk slot j of `other`.
    """
    passages = ed.dot_passages[did]
    k = len(passages)
    _require(k >= 1, f"{ctx}: dot {did} has no passages")
    other_passages = ed.dot_passages[other]
    _require(len(other_passages) >= k,
             f"{ctx}: dot {other} has fewer passages than dot {did}")
    pos = ed.positions()
    partners = []
    for j, node in enumerate(passages):
        _require(node.ev.down, f"{ctx}: passages of dot {did} must all go down")
        uid, idx = pos[id(node)]
        nodes = ed.comp_nodes[uid]
        step = 1 if after else -1
        partner = nodes[(idx + step) % len(nodes)]
        ev = partner.ev
        _require(isinstance(ev, DotPassage) and ev.dot == other and ev.down,
                 f"{ctx}: strand neighbor of passage {j} is not a down passage "
                 f"of dot {other}")
        _require(other_passages[j] is partner,
                 f"{ctx}: disk slot {j} of dot {other} is not aligned")
        partners.append(partner)
    return partners


def _ii6(ed: _Editor, spec: dict) -> None:
    did = _dot_entry(ed, spec["dot"], "II-6")
    bid = _dot_entry(ed, spec["through"], "II-6")
    _require(did != bid, "II-6: needs two distinct dots")
    a = ed.colors[did]
    b = ed.colors[bid]
    try:
        partners = _aligned_partners(ed, did, bid, after=True, ctx="II-6")
        ed.colors[did] = b.inv * a * b
    except MoveError:
        partners = _aligned_partners(ed, did, bid, after=False, ctx="II-6")
        ed.colors[did] = b * a * b.inv
    pos = ed.positions()
    for node, partner in zip(ed.dot_passages[did], partners):
        uid, _ = pos[id(node)]
        nodes = ed.comp_nodes[uid]
        ia, ib = nodes.index(node), nodes.index(partner)
        nodes[ia], nodes[ib] = nodes[ib], nodes[ia]


def _iii1_slide(ed: _Editor, spec: dict) -> None:
    did = _dot_entry(ed, spec["dot"], "III-1-slide")
    bid = _dot_entry(ed, spec["over"], "III-1-slide")
    _require(did != bid, "III-1-slide: needs two distinct dots")
    passages = ed.dot_passages[did]
    _require(all(node.ev.down for node in passages),
             f"III-1-slide: passages of dot {did} must all go down")
    pos = ed.positions()
    new_nodes = []
    for node in passages:
        uid, _ = pos[id(node)]
        nodes = ed.comp_nodes[uid]
        fresh = _Node(DotPassage(bid, True))
        nodes.insert(nodes.index(node) + 1, fresh)
        new_nodes.append(fresh)
    ed.dot_passages[bid][0:0] = new_nodes
    ed.colors[did] = ed.colors[did] * ed.colors[bid].inv


def _iii1_unslide(ed: _Editor, spec: dict) -> None:
    did = _dot_entry(ed, spec["dot"], "III-1-unslide")
    bid = _dot_entry(ed, spec["over"], "III-1-unslide")
    _require(did != bid, "III-1-unslide: needs two distinct dots")
    partners = _aligned_partners(ed, did, bid, after=True, ctx="III-1-unslide")
    pos = ed.positions()
    for partner in partners:
        uid, _ = pos[id(partner)]
        ed.comp_nodes[uid].remove(partner)
    del ed.dot_passages[bid][:len(partners)]
    ed.colors[did] = ed.colors[did] * ed.colors[bid]


# -- canceling pair moves ---------------------------------------------------


def _iii4_insert(ed: _Editor, spec: dict, identity: GroupElement) -> None:
    did = ed.new_dot(identity)
    uid = ed.new_component()
    node = _Node(DotPassage(did, True))
    ed.comp_nodes[uid].append(node)
    ed.dot_passages[did].append(node)


def _iii4_remove(ed: _Editor, spec: dict) -> None:
    did = _dot_entry(ed, spec["dot"], "III-4-remove")
    _require(ed.colors[did].is_identity(),
             f"III-4-remove: dot {did} is not colored with the identity")
    passages = ed.dot_passages[did]
    _require(len(passages) == 1, "III-4-remove: dot must have exactly one passage")
    pos = ed.positions()
    uid, _ = pos[id(passages[0])]
    _require(len(ed.comp_nodes[uid]) == 1,
             "III-4-remove: the strand meets crossings or other dots")
    ed.comp_order.remove(uid)
    del ed.comp_nodes[uid]
    ed.dot_order.remove(did)
    del ed.dot_passages[did]
    del ed.colors[did]


def _iii5_insert(ed: _Editor, spec: dict) -> None:
    ed.new_component()
    ed.h3 += 1


def _iii5_remove(ed: _Editor, spec: dict) -> None:
    uid = _comp_entry(ed, spec["component"], "III-5-remove")
    _require(not ed.comp_nodes[uid],
             f"III-5-remove: undotted component {uid} is not bare")
    _require(ed.h3 >= 1, "III-5-remove: no 3-handle available to cancel")
    ed.comp_order.remove(uid)
    del ed.comp_nodes[uid]
    ed.h3 -= 1


def _global_conjugate(ed: _Editor, spec: dict, group) -> None:
    beta = spec["element"]
    if isinstance(beta, str):
        names = list(group.names)
        _require(beta in names, f"global-conjugate: unknown element {beta!r}")
        beta = names.index(beta)
    _require(isinstance(beta, int) and 0 <= beta < group.order,
             "global-conjugate: element out of range")
    for did in list(ed.colors):
        ed.colors[did] = group.element(group.conj(beta, ed.colors[did].index))


_PARAM_KEYS = {
    "I-2-insert": ("over", "over_pos", "under", "under_pos", "sign"),
    "I-2-remove": ("c1", "c2"),
    "I-3": ("crossings",),
    "I-5": ("crossing",),
    "II-1-insert": ("dot", "disk_pos", "component", "event_pos", "first_down"),
    "II-1-remove": ("dot", "disk_pos"),
    "II-5": ("dot",),
    "II-6": ("dot", "through"),
    "III-1-slide": ("dot", "over"),
    "III-1-unslide": ("dot", "over"),
    "III-4-insert": (),
    "III-4-remove": ("dot",),
    "III-5-insert": (),
    "III-5-remove": ("component",),
    "global-conjugate": ("element",),
}


def move_names() -> tuple:
    return tuple(sorted(_PARAM_KEYS))


def apply_move(cd: ColoredDiagram, spec: dict, group=None) -> ColoredDiagram:
    """Rewrite cd by one move; spec is {"move": name, ...params}.

    group is only needed by III-4-insert and global-conjugate when the
    diagram has no colored dots to read it from.
    """
    if not isinstance(spec, dict) or "move" not in spec:
        raise MoveError("move spec must be a dict with a 'move' key")
    name = spec["move"]
    if name not in _PARAM_KEYS:
        raise MoveError(f"unknown move {name!r}")
    missing = [k for k in _PARAM_KEYS[name]
               if k not in spec and k not in ("sign", "first_down")]
    if missing:
        raise MoveError(f"{name}: missing parameters {missing}")
    ed = _Editor(cd)
    if group is None and cd.colors:
        group = next(iter(cd.colors.values())).group
    if name == "I-2-insert":
        _i2_insert(ed, spec)
    elif name == "I-2-remove":
        _i2_remove(ed, spec)
    elif name == "I-3":
        _i3(ed, spec)
    elif name == "I-5":
        _i5(ed, spec)
    elif name == "II-1-insert":
        _ii1_insert(ed, spec)
    elif name == "II-1-remove":
        _ii1_remove(ed, spec)
    elif name == "II-5":
        _ii5(ed, spec)
    elif name == "II-6":
        _ii6(ed, spec)
    elif name == "III-1-slide":
        _iii1_slide(ed, spec)
    elif name == "III-1-unslide":
        _iii1_unslide(ed, spec)
    elif name == "III-4-insert":
        if group is None:
            raise MoveError("III-4-insert: no group available; pass group=")
        _iii4_insert(ed, spec, group.element(group.identity_index))
    elif name == "III-4-remove":
        _iii4_remove(ed, spec)
    elif name == "III-5-insert":
        _iii5_insert(ed, spec)
    elif name == "III-5-remove":
        _iii5_remove(ed, spec)
    elif name == "global-conjugate":
        if group is None:
            raise MoveError("global-conjugate: no group available; pass group=")
        _global_conjugate(ed, spec, group)
    try:
        return ed.freeze()
    except DiagramError as exc:  # pragma: no cover - internal bug guard
        raise MoveError(f"{name}: rewrite produced an invalid diagram: {exc}")


# -- candidate enumeration (for fuzzing) -------------------------------------


def move_candidates(cd: ColoredDiagram, inserts: bool = True, group=None) -> list:
    """All applicable move specs, deterministic order.

    Insert-type specs are enumerated over every legal position, so the
    list grows with diagram size; pattern moves are verified by a dry
    apply_move run before being reported.
    """
    d = cd.diagram
    out = []
    cross_ids = [c.id for c in d.crossings]
    for i, c1 in enumerate(cross_ids):
        for c2 in cross_ids[i + 1:]:
            out.append({"move": "I-2-remove", "c1": c1, "c2": c2})
            out.append({"move": "I-2-remove", "c1": c2, "c2": c1})
    if len(cross_ids) >= 3:
        for i, c1 in enumerate(cross_ids):
            for j in range(i + 1, len(cross_ids)):
                for k in range(j + 1, len(cross_ids)):
                    out.append({"move": "I-3",
                                "crossings": [c1, cross_ids[j], cross_ids[k]]})
    for c in cross_ids:
        out.append({"move": "I-5", "crossing": c})
    for x in d.dotted:
        for i in range(max(len(x.passages) - 1, 0)):
            out.append({"move": "II-1-remove", "dot": x.id, "disk_pos": i})
        out.append({"move": "II-5", "dot": x.id})
        out.append({"move": "III-4-remove", "dot": x.id})
        for y in d.dotted:
            if y.id == x.id:
                continue
            out.append({"move": "II-6", "dot": x.id, "through": y.id})
            out.append({"move": "III-1-slide", "dot": x.id, "over": y.id})
            out.append({"move": "III-1-unslide", "dot": x.id, "over": y.id})
    for u in d.undotted:
        out.append({"move": "III-5-remove", "component": u.id})
    if group is None and cd.colors:
        group = next(iter(cd.colors.values())).group
    if group is not None:
        for beta in range(group.order):
            out.append({"move": "global-conjugate", "element": beta})
    if inserts:
        for ua in d.undotted:
            for ub in d.undotted:
                for i in range(len(ua.events) + 1):
                    for j in range(len(ub.events) + 1):
                        if ua.id == ub.id and i == j:
                            continue
                        for sign in ("+", "-"):
                            out.append({"move": "I-2-insert",
                                        "over": ua.id, "over_pos": i,
                                        "under": ub.id, "under_pos": j,
                                        "sign": sign})
        for x in d.dotted:
            for u in d.undotted:
                for i in range(len(x.passages) + 1):
                    for p in range(len(u.events) + 1):
                        for first_down in (True, False):
                            out.append({"move": "II-1-insert", "dot": x.id,
                                        "disk_pos": i, "component": u.id,
                                        "event_pos": p,
                                        "first_down": first_down})
        if group is not None:
            out.append({"move": "III-4-insert"})
        out.append({"move": "III-5-insert"})
    applicable = []
    for spec in out:
        try:
            apply_move(cd, spec, group=group)
        except MoveError:
            continue
        applicable.append(spec)
    return applicable

"""Sampled and exact verification of the structural properties.

Every check is deterministic given (polygon, seed, sample counts), reports
wall-skipped samples separately from violations, and makes each violation
replayable from its (seed, index) pair.  Containment assertions use closed
strips; exact assertions (tile vertices, region identities, label sets) use
no sampling at all.
"""

from __future__ import annotations

import dataclasses
import time
from fractions import Fraction
from typing import List, Optional, Tuple

from .billiards import inverse_square_map, square_map
from .dynamics import (
    IndexedPoint,
    far_radius,
    pinwheel_step,
    pinwheel_theorem_step,
    strip_system_return,
)
from .errors import BudgetExceededError, MapUndefinedError
from .generate import random_nice_polygon
from .geometry import (
    ConvexRegion,
    HalfPlane,
    Line,
    Location,
    Point,
    Vec,
    _one_dim_feasible,
    _one_dim_interval,
    _pick_in_interval,
)
from .model import BilliardModel
from .paths import apex_sequence
from .polygon import NicePolygon
from .quasirational import (
    annulus_windows,
    in_annulus,
    in_trapped_extent,
    necklace,
    quasi_analyze,
)
from .report import CheckReport
from .rng import Rng
from .scalars import sign
from .strips import strip_map

__all__ = [
    "random_nice_polygon",
    "check_pinwheel_theorem",
    "check_far_field",
    "check_structure3",
    "check_pin1_pin2_move",
    "check_apex",
    "check_structure1",
    "check_exit_reversal_conjugate",
    "check_necklace_invariance",
    "run_all",
    "negative_controls",
]


# ---------------------------------------------------------------------------
# sample generation over tiles


def _recession_direction(region: ConvexRegion) -> Vec:
    """A rational direction along which the region recedes to infinity,
    strictly interior to the recession cone when one exists."""
    norms = [h.normalized() for h in region.constraints]
    for strict in (True, False):
        for dx in (1, -1):
            bounds = [(b, -a * dx, strict) for (a, b, _c, _s) in norms]
            if _one_dim_feasible(bounds):
                lo, up = _one_dim_interval(bounds)
                t = _pick_in_interval(lo, up)
                cand = Vec(Fraction(dx), t)
                if all(sign(a * cand.x + b * cand.y) >= 0
                       for (a, b, _c, _s) in norms):
                    return cand
    for dy in (1, -1):
        cand = Vec(Fraction(0), Fraction(dy))
        if all(sign(b * dy) >= 0 for (_a, b, _c, _s) in norms):
            return cand
    raise AssertionError("no recession direction for an unbounded region")


def tile_samples(model: BilliardModel, tile, count: int, rng: Rng,
                 radii_scale=None) -> List[Point]:
    """Interior samples of a tile: barycentric for bounded tiles, points at
    exponentially spaced distances along a recession ray for unbounded ones."""
    if not tile.unbounded:
        seed = rng.u64(hash(tile.label) & 0xFFFF)
        return list(tile.region.sample_points(count, seed=seed))
    direction = _recession_direction(tile.region)
    scale = radii_scale if radii_scale is not None else Fraction(64)
    out = []
    for i in range(count):
        base = tile.region.interior_point(rng.split(11, i), i)
        t = scale * (2 ** (i % 3)) * (1 + rng.unit(1000 + i))
        out.append(base + direction * t)
    return out


def _polygon_doc(model: BilliardModel) -> dict:
    return model.polygon.to_document()


# ---------------------------------------------------------------------------
# the checks


def check_pinwheel_theorem(model: BilliardModel, samples: int = 60,
                           seed: int = 0, budget_factor: int = 3) -> CheckReport:
    """Every sampled tile point must reach its landing state within 3n
    pinwheel steps; bounded-tile samples additionally realize the 2n-step
    bound and visit exactly the telescoped prefix points on the way."""
    rep = CheckReport("pinwheel-theorem", _polygon_doc(model), seed)
    t0 = time.monotonic()
    n = model.n
    rng = Rng(seed).split(0x71, n)
    tiles = model.partition.tiles
    per_tile = max(3, -(-samples // max(len(tiles), 1)))
    pool = []
    for t_i, tile in enumerate(tiles):
        for p in tile_samples(model, tile, per_tile, rng.split(t_i),
                              radii_scale=far_radius(model, factor=1)):
            pool.append((tile, p))
    # strip-approach samples: preimages of points spread across each strip's
    # width at far radius, so the k = 2 branch is exercised on every strip
    R = far_radius(model)
    for j in range(n):
        pair = model.system.pair(j)
        d = pair.line.direction()
        nrm = pair.line.normal()
        n2 = nrm.dot(nrm)
        for t_i, sgn in enumerate((1, -1, 1)):
            # offsets W/4, 3W/4, 5W/4: inside the strip twice, beyond it once
            off = (pair.width * Fraction(2 * t_i + 1, 4)
                   + pair.width * rng.split(0xA9, j).unit(t_i) / 64)
            q0 = (Point(pair.line.a * pair.line.c / n2,
                        pair.line.b * pair.line.c / n2)
                  + d * (sgn * (2 + t_i) * R / (abs(d.x) + abs(d.y)))
                  + nrm * (off / n2))
            try:
                p0, _ = inverse_square_map(model.polygon, q0)
            except MapUndefinedError:
                continue
            pool.append((None, p0))
    idx = 0
    for tile, p in pool:
        idx += 1
        rep.sample()
        try:
            q, used = pinwheel_theorem_step(model, p, budget_factor)
        except BudgetExceededError:
            rep.fail(repr(p), f"k <= {budget_factor * n}", "budget exceeded", idx)
            continue
        except MapUndefinedError:
            rep.skip()
            continue
        if used > 3 * n:
            rep.fail(repr(p), f"k <= {3 * n}", f"k = {used}", idx)
            continue
        if tile is not None and not tile.unbounded:
            err = _structure2_realization(model, tile, p, q)
            if err is not None:
                rep.fail(repr(p), err[0], err[1], idx)
                continue
        rep.ok()
    rep.runtime = time.monotonic() - t0
    return rep


def _structure2_realization(model: BilliardModel, tile, p: Point, q: Point):
    """The pinwheel orbit of (p, a-1) must reach (psi(p), b-1) within 2n
    steps, and its planar trace must equal the telescoped prefix points."""
    n = model.n
    path = model.paths.by_id[tile.path_id]
    state = IndexedPoint(p, (path.start - 1) % n)
    target_index = (path.end_lifted - 1) % n
    expected = [p]
    acc = None
    for i in range(path.start, path.end_lifted + 1):
        step = path.steps[i] * 2
        acc = step if acc is None else acc + step
        nxt = p + acc
        if nxt != expected[-1]:
            expected.append(nxt)
    trace = [p]
    for _ in range(2 * n):
        try:
            state = pinwheel_step(model.system, state)
        except MapUndefinedError:
            return ("orbit off walls", "strip boundary hit")
        if state.point != trace[-1]:
            trace.append(state.point)
        if state.point == q and state.index == target_index:
            if trace != expected:
                return (f"planar trace {expected}", f"{trace}")
            return None
    return (f"(psi(p), b-1) within {2 * n} pinwheel steps", "not reached")


def check_far_field(model: BilliardModel, samples: int = 200, seed: int = 0,
                    radius=None) -> CheckReport:
    """Beyond the far radius: k is 1 or 2, and k = 2 exactly when the image
    lands inside a pinwheel strip (which is then the index-shifting strip)."""
    rep = CheckReport("far-field-dichotomy", _polygon_doc(model), seed)
    t0 = time.monotonic()
    n = model.n
    R = radius if radius is not None else far_radius(model)
    rep.notes.append(f"far radius = {R}")
    rng = Rng(seed).split(0xFA7)
    i = 0
    while rep.valid + len(rep.violations) < samples and i < 20 * samples:
        i += 1
        ux = rng.int_range(2 * i, -9973, 9973)
        uy = rng.int_range(2 * i + 1, -9973, 9973)
        if ux == 0 and uy == 0:
            continue
        s = abs(ux) + abs(uy)
        p = Point(Fraction(2 * R * ux, s), Fraction(2 * R * uy, s))
        rep.sample()
        try:
            q, _ = square_map(model.polygon, p)
            a = model.path_start(p)
            qq, k = pinwheel_theorem_step(model, p)
        except MapUndefinedError:
            rep.skip()
            continue
        strips_in = [j for j in range(n) if model.system.pair(j).location(q) == 1]
        if k not in (1, 2):
            rep.fail(repr(p), "k in {1, 2}", f"k = {k}", i)
        elif (k == 2) != bool(strips_in):
            rep.fail(repr(p), "k = 2 iff psi(p) inside a strip",
                     f"k = {k}, strips = {strips_in}", i)
        elif k == 2 and strips_in != [a % n]:
            rep.fail(repr(p), f"landing strip = {a % n}", f"strips = {strips_in}", i)
        else:
            rep.ok()
    rep.runtime = time.monotonic() - t0
    return rep


def check_structure3(model: BilliardModel, samples: int = 40,
                     seed: int = 0) -> CheckReport:
    """For q = psi(p): q lies in the closed strips b..c-1 and the pinwheel
    map shifts (q, b-1) to (q, c-1) within n steps without moving q."""
    rep = CheckReport("structure3", _polygon_doc(model), seed)
    t0 = time.monotonic()
    n = model.n
    rng = Rng(seed).split(0x53)
    tiles = model.partition.tiles
    per_tile = max(2, samples // max(len(tiles), 1))
    idx = 0
    for tile in tiles:
        path = model.paths.by_id[tile.path_id]
        b = path.end
        for p in tile_samples(model, tile, per_tile, rng.split(idx)):
            idx += 1
            rep.sample()
            try:
                q, _ = square_map(model.polygon, p)
                c = model.path_start(q)
            except MapUndefinedError:
                rep.skip()
                continue
            span = (c - b) % n
            bad = None
            for d in range(span):
                pair = model.system.pair(b + d)
                t = pair.offset(q)
                if not (0 <= t <= pair.width):
                    bad = f"q outside closed strip {(b + d) % n}"
                    break
            if bad is None:
                bad = _index_shift(model, q, b, c, span)
            if bad is None:
                rep.ok()
            else:
                rep.fail(repr(p), "containment and index shift", bad, idx)
    rep.runtime = time.monotonic() - t0
    return rep


def _index_shift(model: BilliardModel, q: Point, b: int, c: int,
                 span: int) -> Optional[str]:
    n = model.n
    state = IndexedPoint(q, (b - 1) % n)
    if span == 0:
        return None
    for _ in range(n):
        try:
            state = pinwheel_step(model.system, state)
        except MapUndefinedError:
            return "strip boundary during index shift"
        if state.point != q:
            return "pinwheel map moved the point during index shift"
        if state.index == (c - 1) % n:
            return None
    return f"index not shifted to {(c - 1) % n} within {n} steps"


def check_pin1_pin2_move(model: BilliardModel, samples_per_tile: int = 20,
                         seed: int = 0,
                         corrupt_terminal_sign: bool = False) -> CheckReport:
    """Bounded tiles: the translated-tile containments (exact on vertices),
    the final strip-map action, the displacement identity, and the bounded
    depth bound.  corrupt_terminal_sign is a harness self-test hook."""
    rep = CheckReport("pin1-pin2-move", _polygon_doc(model), seed)
    t0 = time.monotonic()
    n = model.n
    rng = Rng(seed).split(0x91)
    idx = 0
    for tile in model.partition.tiles:
        if tile.unbounded:
            continue
        path = model.paths.by_id[tile.path_id]
        if corrupt_terminal_sign:
            steps = dict(path.steps)
            steps[path.end_lifted] = -steps[path.end_lifted]
            path = dataclasses.replace(path, steps=steps)
        idx += 1
        rep.sample()
        verts = tile.region.vertices()
        # move: exact displacement identity per tile
        if path.displacement() != tile.translation:
            rep.fail(path.display(), f"displacement {tile.translation}",
                     f"{path.displacement()}", idx)
            continue
        # pin1: translated closed tile inside each closed strip, on vertices
        bad = None
        for k in range(path.start, path.end_lifted):
            shift = path.prefix_sum(k)
            pair = model.system.pair(k)
            for v in verts:
                t = pair.offset(v + shift)
                if not (0 <= t <= pair.width):
                    bad = f"vertex {v} + prefix({k}) outside strip {k % n}"
                    break
            if bad:
                break
        # bounded depth: the tile sits within half a width of its start strip
        pair_a = model.system.pair(path.start)
        for v in verts:
            if bad:
                break
            if pair_a.slab_distance(v) > pair_a.width / 2:
                bad = f"vertex {v} deeper than half the width of strip {path.start}"
        if bad:
            rep.fail(path.display(), "closed containments", bad, idx)
            continue
        # pin2: the b-th strip map acts by the doubled terminal step
        shift = (path.prefix_sum(path.end_lifted - 1)
                 if path.span >= 1 else None)
        ok = True
        if shift is not None:
            pair_b = model.system.pair(path.end_lifted)
            want = path.steps[path.end_lifted] * 2
            pts = tile.region.sample_points(samples_per_tile,
                                            seed=rng.u64(idx) & 0xFFFF)
            for s in pts:
                rep.sample()
                moved_from = s + shift
                try:
                    got = strip_map(pair_b, moved_from)
                except MapUndefinedError:
                    rep.skip()
                    continue
                if got != moved_from + want:
                    rep.fail(repr(s), f"mu_{path.end_lifted % n} adds {want}",
                             f"{got - moved_from}", idx)
                    ok = False
                    break
                rep.ok()
        if ok:
            rep.ok()
    rep.runtime = time.monotonic() - t0
    return rep


def check_apex(model: BilliardModel) -> CheckReport:
    """Each start spoke's maximal path: every telescoped apex point lies in
    the corresponding closed strip."""
    rep = CheckReport("apex", _polygon_doc(model), 0)
    t0 = time.monotonic()
    n = model.n
    for a in range(n):
        path = model.paths.maximal_from(a)
        pts = apex_sequence(path)
        rep.sample()
        bad = None
        for i, q in enumerate(pts[1:]):
            pair = model.system.pair(path.start + i)
            t = pair.offset(q)
            if not (0 <= t <= pair.width):
                bad = (f"apex point {i} of {path.display()} outside "
                       f"closed strip {(path.start + i) % n}")
                break
        if bad is None:
            rep.ok()
        else:
            rep.fail(path.display(), "closed strip containment", bad, a)
    rep.runtime = time.monotonic() - t0
    return rep


def check_structure1(model: BilliardModel) -> CheckReport:
    """Exact bijection between admissible paths and nonempty tiles."""
    rep = CheckReport("structure1", _polygon_doc(model), 0)
    t0 = time.monotonic()
    tile_labels = set(model.partition.by_label)
    path_labels = set()
    for p in model.paths.paths:
        path_labels.add(p.endpoint_pair())
        if p.length == 1:
            path_labels.add((p.last_vertex_index, p.first_vertex_index))
    rep.sample()
    if tile_labels == path_labels:
        rep.ok()
    else:
        rep.fail("label sets", f"{sorted(path_labels)}", f"{sorted(tile_labels)}")
    unbounded = sum(t.unbounded for t in model.partition.tiles)
    bounded = len(model.partition.tiles) - unbounded
    rep.notes.append(f"paths={len(model.paths.paths)} unbounded_tiles={unbounded} "
                     f"bounded_tiles={bounded}")
    rep.sample()
    if unbounded == 2 * model.n:
        rep.ok()
    else:
        rep.fail("unbounded tile count", f"{2 * model.n}", f"{unbounded}")
    rep.runtime = time.monotonic() - t0
    return rep


def check_exit_reversal_conjugate(model: BilliardModel, samples: int = 20,
                                  seed: int = 0) -> CheckReport:
    """Exit characterization (exact region arithmetic, both directions),
    reversal onto the backward partition (exact + sampled labels), and the
    reflected-polygon index laws."""
    rep = CheckReport("exit-reversal-conjugate", _polygon_doc(model), seed)
    t0 = time.monotonic()
    n = model.n
    # exit: a tile is unbounded exactly when its translate meets it
    for tile in model.partition.tiles:
        rep.sample()
        image = tile.region.translate(tile.translation)
        meets = not image.intersect(tile.region).is_empty
        if meets == tile.unbounded:
            rep.ok()
        else:
            rep.fail(f"tile {tile.label}",
                     f"psi(T) meets T iff unbounded ({tile.unbounded})",
                     f"meets = {meets}")
    # reversal: psi(T+(v,w)) equals the backward tile (w,v), exactly
    for tile in model.partition.tiles:
        rep.sample()
        back = model.backward_partition.by_label.get((tile.w_index, tile.v_index))
        if back is None:
            rep.fail(f"tile {tile.label}", "backward tile (w,v) exists", "missing")
            continue
        if tile.region.translate(tile.translation) == back.region:
            rep.ok()
        else:
            rep.fail(f"tile {tile.label}", "psi(T+) == T-(w,v) as regions",
                     "region mismatch")
    # sampled labels: the backward label of psi(p) reverses the forward label
    rng = Rng(seed).split(0xEE)
    for i, tile in enumerate(model.partition.tiles):
        pts = tile_samples(model, tile, max(1, samples // len(model.partition.tiles)),
                           rng.split(i))
        for p in pts:
            rep.sample()
            try:
                q, lab = square_map(model.polygon, p)
                _, back_lab = inverse_square_map(model.polygon, q)
            except MapUndefinedError:
                rep.skip()
                continue
            if back_lab == (lab[1], lab[0]):
                rep.ok()
            else:
                rep.fail(repr(p), f"backward label {(lab[1], lab[0])}",
                         f"{back_lab}", i)
    _conjugate_laws(model, rep)
    rep.runtime = time.monotonic() - t0
    return rep


def _reflect_region(r: ConvexRegion) -> ConvexRegion:
    return ConvexRegion.from_halfplanes(
        HalfPlane(Line(h.line.a, -h.line.b, h.line.c), h.sense)
        for h in r.constraints)


def _conjugate_laws(model: BilliardModel, rep: CheckReport):
    """Reflection in the x-axis: strips map by j -> c - j, spokes by
    j -> c + 1 - j (one extra shift), special flags preserved, vectors
    matching up to the orientation of the endpoint correspondence."""
    n = model.n
    reflected = NicePolygon.from_points(
        [Point(v.x, -v.y) for v in model.polygon.vertices])
    other = BilliardModel(reflected)
    r0 = _reflect_region(model.system.strip(0))
    hits = [k for k in range(n) if other.system.strip(k) == r0]
    rep.sample()
    if len(hits) != 1:
        rep.fail("strip reflection", "unique matching strip", f"{hits}")
        return
    rep.ok()
    c = hits[0]
    rep.notes.append(f"conjugate index origin c = {c}")
    for j in range(n):
        rep.sample()
        if other.system.strip((c - j) % n) != _reflect_region(model.system.strip(j)):
            rep.fail(f"strip {j}", f"reflects onto strip {(c - j) % n}", "mismatch")
            continue
        k = (c + 1 - j) % n
        s, s2 = model.system.spoke(j), other.system.spoke(k)
        rt = Point(s.tail.x, -s.tail.y)
        rh = Point(s.head.x, -s.head.y)
        if {s2.tail, s2.head} != {rt, rh}:
            rep.fail(f"spoke {j}", f"reflects onto spoke {k}", "endpoint mismatch")
            continue
        if s.special != s2.special:
            rep.fail(f"spoke {j}", "special flag preserved", f"{s2.special}")
            continue
        pv, pv2 = model.system.pair(j).V, other.system.pair(k).V
        refl_v = (pv.x, -pv.y)
        plus = refl_v == (pv2.x, pv2.y)
        minus = refl_v == (-pv2.x, -pv2.y)
        if not (plus or minus) or plus != (rt == s2.tail):
            rep.fail(f"spoke {j}", "V reflects onto +-V with matching tails",
                     f"plus={plus} minus={minus}")
            continue
        rep.ok()


def check_necklace_invariance(model: BilliardModel, m: int = 1,
                              samples: int = 24, seed: int = 0,
                              exponent_offset: int = 0) -> CheckReport:
    """Quasirational necklace transfer: each ring copy at exponent m*D_j is
    carried rigidly onto the copy at exponent +-m*D_{j+1} (exact vertex-set
    identity plus sampled membership), and annulus points stay between the
    rings.  exponent_offset != 0 is the harness negative-control hook."""
    rep = CheckReport("necklace-invariance", _polygon_doc(model), seed)
    t0 = time.monotonic()
    system = model.system
    quasi = quasi_analyze(system)
    if not quasi.quasirational:
        rep.notes.append("polygon not quasirational; nothing to check")
        rep.runtime = time.monotonic() - t0
        return rep
    n = model.n
    rng = Rng(seed).split(0x9E, m)
    per_piece = max(2, samples // (2 * n))
    for j in range(n):
        Mj = m * quasi.D_int[j] + exponent_offset
        Mj1 = m * quasi.D_int[(j + 1) % n]
        targets = [necklace(system, j + 1, Mj1), necklace(system, j + 1, -Mj1)]
        for kind in ("P", "Q"):
            spec = necklace(system, j, Mj)
            region = spec.p_region() if kind == "P" else spec.q_region()
            pts = region.sample_points(per_piece, seed=rng.u64(4 * j) & 0xFFFF)
            landings = []
            for p in pts:
                rep.sample()
                try:
                    land, _ = strip_system_return(system, IndexedPoint(p, j))
                except MapUndefinedError:
                    rep.skip()
                    continue
                hit = [t for t in targets
                       if (t.p_region() if kind == "P" else t.q_region())
                       .contains(land.point) is Location.INTERIOR]
                if not hit:
                    rep.fail(repr(p), f"lands in ring copy |{Mj1}| of strip "
                                      f"{(j + 1) % n}", f"{land.point}", j)
                    continue
                landings.append((p, land.point, hit[0]))
                rep.ok()
            # rigid-translation identity: the whole copy maps by one vector
            if landings and exponent_offset == 0:
                rep.sample()
                p0, q0, tgt = landings[0]
                delta = q0 - p0
                src = spec.p_vertices if kind == "P" else spec.q_vertices
                dst = tgt.p_vertices if kind == "P" else tgt.q_vertices
                if {v + delta for v in src} == set(dst):
                    rep.ok()
                else:
                    rep.fail(f"copy {kind}^{Mj} of strip {j}",
                             "maps rigidly onto the target copy",
                             "vertex sets differ", j)
        # annulus membership transfer
        if exponent_offset == 0:
            wins = annulus_windows(system, j, m * quasi.D_int[j])
            pair = system.pair(j)
            produced = 0
            for t_i in range(6 * per_piece):
                if produced >= per_piece:
                    break
                (a1, b1), (a2, b2) = wins
                lo, hi = (a1, b1) if t_i % 2 == 0 else (a2, b2)
                if not lo < hi:
                    continue
                s_val = rng.split(7, j).between(t_i, lo, hi)
                off = pair.width * rng.split(8, j).unit(t_i)
                p = _frame_point(system, j, s_val, off)
                if not in_annulus(system, j, m * quasi.D_int[j], p):
                    continue
                produced += 1
                rep.sample()
                try:
                    land, _ = strip_system_return(system, IndexedPoint(p, j))
                except MapUndefinedError:
                    rep.skip()
                    continue
                if in_trapped_extent(system, (j + 1) % n,
                                     m * quasi.D_int[(j + 1) % n], land.point):
                    rep.ok()
                else:
                    rep.fail(repr(p), f"between the rings of strip {(j + 1) % n}",
                             f"{land.point}", j)
    rep.runtime = time.monotonic() - t0
    return rep


def _frame_point(system, j, s_val, off) -> Point:
    from .quasirational import _solve_frame, necklace_shift

    pair = system.pair(j)
    d = necklace_shift(system, j)
    return _solve_frame(pair.line.a, pair.line.b, pair.line.c + off,
                        d.x, d.y, s_val)


# ---------------------------------------------------------------------------
# suite driver and negative controls


CHECKS: Tuple[str, ...] = (
    "structure1", "pinwheel-theorem", "far-field-dichotomy", "structure3",
    "pin1-pin2-move", "apex", "exit-reversal-conjugate", "necklace-invariance",
)


def run_all(polygon: NicePolygon, profile: str = "quick", seed: int = 0,
            samples: Optional[int] = None) -> List[CheckReport]:
    """Run the whole suite on one polygon; sample counts follow the profile,
    or the explicit `samples` override."""
    if profile not in ("quick", "full"):
        raise ValueError(f"unknown profile {profile!r}")
    model = BilliardModel(polygon)
    quick = profile == "quick"

    def count(quick_n, full_n):
        return samples if samples is not None else (quick_n if quick else full_n)

    reports = [
        check_structure1(model),
        check_pinwheel_theorem(model, samples=count(40, 200), seed=seed),
        check_far_field(model, samples=count(60, 400), seed=seed),
        check_structure3(model, samples=count(30, 120), seed=seed),
        check_pin1_pin2_move(model, samples_per_tile=6 if quick else 20, seed=seed),
        check_apex(model),
        check_exit_reversal_conjugate(model, samples=count(12, 40), seed=seed),
        check_necklace_invariance(model, m=1, samples=count(12, 30), seed=seed),
    ]
    for rep in reports:
        rate = rep.wall_skip_rate()
        if rate > 0.01:
            rep.fail("wall-skip rate", "<= 1%", f"{rate:.3%}")
    return reports


def negative_controls(polygon: NicePolygon, seed: int = 0) -> List[CheckReport]:
    """Deliberate corruptions that must each produce at least one violation;
    guards the harness against vacuous passes."""
    out = []

    # 1. halve one strip's width: strip containment / the pinwheel budget break
    model = BilliardModel(polygon)
    pair = model.system.pair(0)
    hacked = dataclasses.replace(
        pair, width=pair.width / 2,
        line_far=pair.line.parallel_offset(pair.width / 2))
    broken = BilliardModel(polygon)
    broken.__dict__["system"] = model.system.with_pair(0, hacked)
    broken.__dict__["partition"] = model.partition
    broken.__dict__["paths"] = model.paths
    rep = check_structure3(broken, samples=40, seed=seed)
    rep2 = check_pinwheel_theorem(broken, samples=40, seed=seed)
    rep.attempted += rep2.attempted
    rep.valid += rep2.valid
    rep.wall_skipped += rep2.wall_skipped
    rep.violations.extend(rep2.violations)
    rep.check = "negative-control-halved-strip"
    out.append(rep)

    # 2. flip the terminal step sign of every bounded path: pin2 must break
    rep = check_pin1_pin2_move(model, samples_per_tile=6, seed=seed,
                               corrupt_terminal_sign=True)
    rep.check = "negative-control-flipped-terminal"
    out.append(rep)

    # 3. wrong necklace exponent: the invariance must break
    rep = check_necklace_invariance(model, m=1, samples=16, seed=seed,
                                    exponent_offset=1)
    rep.check = "negative-control-necklace-exponent"
    out.append(rep)
    return out

"""Run the GAP design search for every group and cache the raw results.

Usage: python search_designs.py [GROUP_ID ...]

Writes out/<group>.jsonl (GAP output) and out/actions.json (the coset
actions in this catalog's labeling, needed to re-verify blocks later).
"""

from __future__ import annotations

import json
import subprocess
import sys
import time
from math import lcm
from pathlib import Path

from groups import build_groups
from tables import ROWS

from flagtrans.group import PermGroup, coset_action
from flagtrans.params import FeasibilityContext, feasible_tuples

HERE = Path(__file__).resolve().parent
OUT = HERE / "out"

# groups small enough for a full subgroup lattice: every feasible tuple is searched
COMPLETE_MAX_ORDER = 40320
# groups whose candidate classes are emitted for the catalog (all tuples)
CANDIDATE_MAX_ORDER = 1440
# S10: the full order-restricted lattice is out of reach on this hardware
PRIMARY_ONLY_ABOVE = 1814400


def gap_perm(images) -> str:
    return "PermList([" + ",".join(map(str, images)) + "])"


def plan(gd):
    """(L, actions) for one group; actions are (sid, targets, emit_candidates)."""
    if gd.order <= COMPLETE_MAX_ORDER:
        acts = []
        for s in gd.maximal:
            tuples = feasible_tuples(FeasibilityContext(gd.order, s.order))
            if tuples:
                acts.append((s.subgroup_id, [(t.b, t.k, t.lam) for t in tuples],
                             gd.order <= CANDIDATE_MAX_ORDER))
        return 0, acts
    targets: dict[str, list] = {}
    for _, actions, (v, b, r, k, lam), _ in ROWS:
        # above PRIMARY_ONLY_ABOVE only rows led by this group are searched; designs it
        # shares with its index-2 subgroup are transported when the catalog is built
        acts = actions[:1] if gd.order > PRIMARY_ONLY_ABOVE else actions
        for gid, sid in acts:
            if gid == gd.id and (b, k, lam) not in targets.setdefault(sid, []):
                targets[sid].append((b, k, lam))
    targets = {sid: ts for sid, ts in targets.items() if ts}
    L = lcm(*(gd.order // b for ts in targets.values() for b, _, _ in ts))
    emit = {("S9", "3^3:(2xS4)")}
    return L, [(sid, ts, (gd.id, sid) in emit) for sid, ts in targets.items()]


def main(argv):
    OUT.mkdir(exist_ok=True)
    groups = build_groups()
    wanted = set(argv) or {g.id for g in groups}
    actions_path = OUT / "actions.json"
    actions_db = json.loads(actions_path.read_text()) if actions_path.exists() else {}
    for gd in groups:
        if gd.id not in wanted:
            continue
        G = PermGroup(gd.generators, known_order=gd.order)
        L, acts = plan(gd)
        lines = [f"natgens := [{','.join(gap_perm(g.images) for g in gd.generators)}];", f"L := {L};",
                 "actions := [];"]
        for sid, targets, emit in acts:
            sub = next(s for s in gd.maximal if s.subgroup_id == sid)
            ca = coset_action(G, PermGroup(sub.generators, known_order=sub.order))
            # the image generators correspond one-to-one with the natural generators
            imgs = [list(p.images) for p in ca.image_group.generators]
            actions_db[f"{gd.id}|{sid}"] = {"v": ca.degree, "gens": imgs}
            lines.append(
                f'Add(actions, rec(sid := "{sid}", v := {ca.degree}, '
                f"gens := [{','.join(gap_perm(i) for i in imgs)}], "
                f"targets := {json.dumps([list(t) for t in targets])}, "
                f"emit_candidates := {'true' if emit else 'false'}));")
        lines += ['SetPrintFormattingStatus("*stdout*", false);', f'Read("{HERE / "search.g"}");',
                  "RunSearch(natgens, L, actions);", "QUIT;"]
        job = OUT / f"{gd.id}.g"
        job.write_text("\n".join(lines) + "\n")
        t0 = time.time()
        with open(OUT / f"{gd.id}.jsonl", "w") as fh:
            subprocess.run(["gap", str(job)], stdout=fh, check=True)
        print(f"{gd.id}: L={L} actions={len(acts)} {time.time() - t0:.1f}s", flush=True)
        actions_path.write_text(json.dumps(actions_db))


if __name__ == "__main__":
    main(sys.argv[1:])

#!/usr/bin/env python3
"""Regenerates tests/golden/ from the fixture inputs.

Everything below is an independent reimplementation of what the command line
tool computes (table parsing, approximations, the quotient construction, the
prime-filter representation), so the golden files predict the tool's output
rather than recording it.  Check statuses are computed by actually running
the verification predicates here; only the check names are fixed strings,
because they are part of the tool's output contract.

Usage, from the repository root:

    python3 tests/oracle/gen_goldens.py
"""

import json
from pathlib import Path

TESTS = Path(__file__).resolve().parent.parent
FIXTURES = TESTS / "fixtures"
GOLDEN = TESTS / "golden"


def dumps(value) -> str:
    return json.dumps(value, separators=(",", ":"), ensure_ascii=False) + "\n"


def fnv1a64(data: bytes) -> str:
    value = 0xCBF29CE484222325
    for byte in data:
        value = ((value ^ byte) * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return "fnv1a64:" + format(value, "016x")


def check(name: str, ok: bool, counterexample: str = "") -> dict:
    entry = {"name": name, "status": "pass" if ok else "fail"}
    if not ok:
        entry["counterexample"] = counterexample
    return entry


# ---------------------------------------------------------------------------
# Approximation spaces.  Subsets of the universe are bit masks, bit i being
# the i-th object in universe order.


class Space:
    def __init__(self, objects, blocks):
        self.objects = list(objects)
        self.index = {o: i for i, o in enumerate(self.objects)}
        self.block_masks = [self.mask_of(block) for block in blocks]
        self.full = (1 << len(self.objects)) - 1

    def mask_of(self, ids):
        out = 0
        for i in ids:
            out |= 1 << self.index[i]
        return out

    def ids(self, mask):
        return [o for i, o in enumerate(self.objects) if mask >> i & 1]

    def label(self, mask):
        return "{" + ",".join(self.ids(mask)) + "}"

    def upper(self, a):
        out = 0
        for b in self.block_masks:
            if b & a:
                out |= b
        return out

    def lower(self, a):
        out = 0
        for b in self.block_masks:
            if b & a == b:
                out |= b
        return out

    def capdot(self, a, b):
        return self.upper(a) & b & (a | self.upper(self.full & ~b))

    def uplus(self, a, b):
        return self.lower(a) | b | (a & self.lower(self.full & ~b))

    def grade(self, a, i):
        bit = 1 << i
        if self.lower(a) & bit:
            return 1.0
        if self.upper(a) & bit:
            return 0.5
        return 0.0


def parse_table(text: str) -> Space:
    rows = []
    for line in text.split("\n"):
        if not line.strip():
            continue
        rows.append([cell.strip() for cell in line.split(",")])
    objects = [row[0] for row in rows[1:]]
    block_of_signature = {}
    blocks = []
    for row in rows[1:]:
        signature = tuple(row[1:])
        if signature not in block_of_signature:
            block_of_signature[signature] = len(blocks)
            blocks.append([])
        blocks[block_of_signature[signature]].append(row[0])
    return Space(objects, blocks)


GRADE_NAMES = {0.0: "0", 0.5: "1/2", 1.0: "1"}


def membership_entries(space: Space, a: int):
    return [
        {"object": o, "grade": GRADE_NAMES[space.grade(a, i)]}
        for i, o in enumerate(space.objects)
    ]


# ---------------------------------------------------------------------------
# Quotient of the powerset by "same lower and upper approximation": classes in
# first-occurrence order over ascending subset masks, operations evaluated on
# the first representative of each class.


def quotient_algebra(space: Space) -> dict:
    representatives = []
    class_of_signature = {}
    for a in range(space.full + 1):
        signature = (space.lower(a), space.upper(a))
        if signature not in class_of_signature:
            class_of_signature[signature] = len(representatives)
            representatives.append(a)

    def cls(a):
        return class_of_signature[(space.lower(a), space.upper(a))]

    return {
        "elements": [
            space.label(space.lower(a)) + "|" + space.label(space.upper(a))
            for a in representatives
        ],
        "meet": [[cls(space.capdot(x, y)) for y in representatives] for x in representatives],
        "join": [[cls(space.uplus(x, y)) for y in representatives] for x in representatives],
        "neg": [cls(space.full & ~x) for x in representatives],
        "nabla": [cls(space.upper(x)) for x in representatives],
        "one": cls(space.full),
    }


# ---------------------------------------------------------------------------
# The membership verification suite, evaluated honestly over every subset
# pair of the fixture universe.


def membership_suite(space: Space):
    n = len(space.objects)
    subsets = range(space.full + 1)
    checks = []

    def set2(a, b):
        return "A=" + space.label(a) + ", B=" + space.label(b)

    def pair_object_law(name, combine, grade_law):
        ok, cx = True, ""
        for a in subsets:
            if not ok:
                break
            for b in subsets:
                if not ok:
                    break
                combined = combine(a, b)
                for i in range(n):
                    if space.grade(combined, i) != grade_law(
                        space.grade(a, i), space.grade(b, i)
                    ):
                        ok, cx = False, set2(a, b) + ", object " + space.objects[i]
                        break
        checks.append(check(name, ok, cx))

    pair_object_law("mu(A uplus B) = max(mu(A), mu(B))", space.uplus, max)
    pair_object_law("mu(A capdot B) = min(mu(A), mu(B))", space.capdot, min)

    ok, cx = True, ""
    for a in subsets:
        if not ok:
            break
        for i in range(n):
            if space.grade(space.full & ~a, i) != 1.0 - space.grade(a, i):
                ok, cx = False, "A=" + space.label(a) + ", object " + space.objects[i]
                break
    checks.append(check("mu(~A) = 1 - mu(A)", ok, cx))

    def rough(a):
        return (space.lower(a), space.upper(a))

    def pair_rough_law(name, combine, component_op):
        ok, cx = True, ""
        for a in subsets:
            if not ok:
                break
            for b in subsets:
                la, ua = rough(a)
                lb, ub = rough(b)
                if rough(combine(a, b)) != (component_op(la, lb), component_op(ua, ub)):
                    ok, cx = False, set2(a, b)
                    break
        checks.append(check(name, ok, cx))

    pair_rough_law(
        "rough class of A capdot B = meet of the rough classes",
        space.capdot,
        lambda x, y: x & y,
    )
    pair_rough_law(
        "rough class of A uplus B = join of the rough classes",
        space.uplus,
        lambda x, y: x | y,
    )
    return checks


# ---------------------------------------------------------------------------
# Prime filters and the representation of a finite algebra given by tables.


class Algebra:
    def __init__(self, doc):
        self.elements = doc["elements"]
        self.meet = doc["meet"]
        self.join = doc["join"]
        self.neg = doc["neg"]
        self.nabla = doc["nabla"]
        self.one = doc["one"]
        self.zero = self.neg[self.one]

    def leq(self, x, y):
        return self.meet[x][y] == x

    def delta(self, x):
        return self.neg[self.nabla[self.neg[x]]]


def prime_filters(alg: Algebra):
    n = len(alg.elements)
    out = []
    for mask in range(1, 1 << n):
        members = [x for x in range(n) if mask >> x & 1]
        if alg.one not in members or alg.zero in members:
            continue
        if not all(
            mask >> y & 1 for x in members for y in range(n) if alg.leq(x, y)
        ):
            continue
        if not all(mask >> alg.meet[x][y] & 1 for x in members for y in members):
            continue
        outside = [x for x in range(n) if not mask >> x & 1]
        if not all(
            not mask >> alg.join[x][y] & 1 for x in outside for y in outside
        ):
            continue
        out.append(members)
    return out


def representation(alg: Algebra) -> dict:
    n = len(alg.elements)
    filters = prime_filters(alg)
    filter_sets = [frozenset(f) for f in filters]
    g = []
    for f in filter_sets:
        image = frozenset(x for x in range(n) if alg.neg[x] not in f)
        g.append(filter_sets.index(image))

    # Chains: the blocks {i, g(i)}, in first-occurrence order.
    labels = [min(i, gi) for i, gi in enumerate(g)]
    seen = []
    for label in labels:
        if label not in seen:
            seen.append(label)
    chains = [[i for i, l in enumerate(labels) if l == label] for label in seen]
    names = ["P" + str(i) for i in range(len(filters))]
    fspace = Space(names, [[names[i] for i in chain] for chain in chains])

    def stone(x):
        out = 0
        for i, members in enumerate(filter_sets):
            if x in members:
                out |= 1 << i
        return out

    s = [stone(x) for x in range(n)]
    h = [(fspace.lower(sx), fspace.upper(sx)) for sx in s]
    full_filters = (1 << len(filters)) - 1

    def elem2(x, y):
        return "x=" + alg.elements[x] + ", y=" + alg.elements[y]

    checks = []

    def scan_pairs(name, pred, diagonal=False):
        ok, cx = True, ""
        for x in range(n):
            if not ok:
                break
            for y in range(x + 1 if diagonal else 0, n):
                if not pred(x, y):
                    ok, cx = False, elem2(x, y)
                    break
        checks.append(check(name, ok, cx))

    def scan_each(name, pred):
        ok, cx = True, ""
        for x in range(n):
            if not pred(x):
                ok, cx = False, "x=" + alg.elements[x]
                break
        checks.append(check(name, ok, cx))

    scan_pairs("stone map injective", lambda x, y: s[x] != s[y], diagonal=True)

    if s[alg.zero] != 0 or s[alg.one] != full_filters:
        checks.append(check("stone map lattice homomorphism", False, "bounds"))
    else:
        scan_pairs(
            "stone map lattice homomorphism",
            lambda x, y: s[alg.meet[x][y]] == s[x] & s[y]
            and s[alg.join[x][y]] == s[x] | s[y],
        )

    ok, cx = True, ""
    for chain in chains:
        if len(chain) > 2:
            ok = False
            cx = "chain {" + ",".join(names[i] for i in chain) + "}"
            break
    checks.append(check("filter chains have length at most two", ok, cx))

    chain_of = {}
    for ci, chain in enumerate(chains):
        for i in chain:
            chain_of[i] = ci
    fmasks = [sum(1 << x for x in f) for f in filters]
    ok, cx = True, ""
    for i in range(len(filters)):
        if g[g[i]] != i or chain_of[i] != chain_of[g[i]]:
            ok, cx = False, "P" + str(i)
            break
    if ok:
        for i in range(len(filters)):
            if not ok:
                break
            for j in range(len(filters)):
                if fmasks[i] & ~fmasks[j] == 0 and fmasks[g[j]] & ~fmasks[g[i]] != 0:
                    ok, cx = False, "P" + str(i) + ", P" + str(j)
                    break
    checks.append(check("involution pairs filters within chains", ok, cx))

    scan_pairs("embedding injective", lambda x, y: h[x] != h[y], diagonal=True)
    scan_pairs(
        "embedding preserves meet",
        lambda x, y: h[alg.meet[x][y]] == (h[x][0] & h[y][0], h[x][1] & h[y][1]),
    )
    scan_pairs(
        "embedding preserves join",
        lambda x, y: h[alg.join[x][y]] == (h[x][0] | h[y][0], h[x][1] | h[y][1]),
    )
    scan_each(
        "embedding preserves negation",
        lambda x: h[alg.neg[x]]
        == (full_filters & ~h[x][1], full_filters & ~h[x][0]),
    )
    scan_each(
        "embedding preserves possibility",
        lambda x: h[alg.nabla[x]] == (h[x][1], h[x][1]),
    )
    ok = h[alg.one] == (full_filters, full_filters)
    checks.append(
        check("embedding preserves one", ok, "" if ok else "x=" + alg.elements[alg.one])
    )

    ok, cx = True, ""
    for x in range(n):
        if h[x] != (s[alg.delta(x)], s[alg.nabla[x]]):
            ok, cx = False, "x=" + alg.elements[x]
            break
    if ok:
        for x in range(n):
            if not ok:
                break
            for y in range(n):
                if x != y and alg.delta(x) == alg.delta(y) and alg.nabla[x] == alg.nabla[y]:
                    ok, cx = False, elem2(x, y)
                    break
    checks.append(check("embedding matches the (delta, nabla) signature", ok, cx))

    scan_each(
        "Ms(nabla x) = s(nabla x)",
        lambda x: fspace.upper(s[alg.nabla[x]]) == s[alg.nabla[x]],
    )
    scan_each("Ms(x) = s(nabla x)", lambda x: fspace.upper(s[x]) == s[alg.nabla[x]])
    scan_each(
        "Ls(delta x) = s(delta x)",
        lambda x: fspace.lower(s[alg.delta(x)]) == s[alg.delta(x)],
    )
    scan_each("Ls(x) = s(delta x)", lambda x: fspace.lower(s[x]) == s[alg.delta(x)])
    scan_each(
        "s(~nabla x) = ~Ms(x)",
        lambda x: s[alg.neg[alg.nabla[x]]] == full_filters & ~fspace.upper(s[x]),
    )
    scan_each(
        "s(~delta x) = ~Ls(x)",
        lambda x: s[alg.neg[alg.delta(x)]] == full_filters & ~fspace.lower(s[x]),
    )

    def filter_lemma(name, bad):
        ok, cx = True, ""
        for i in range(len(filters)):
            if not ok:
                break
            if not filter_sets[g[i]] <= filter_sets[i]:
                continue
            for x in range(n):
                if bad(i, x):
                    ok, cx = False, "x=" + alg.elements[x] + ", P=P" + str(i)
                    break
        checks.append(check(name, ok, cx))

    filter_lemma(
        "nabla x in P implies x in P when g(P) <= P",
        lambda i, x: alg.nabla[x] in filter_sets[i] and x not in filter_sets[i],
    )
    filter_lemma(
        "x in g(P) implies delta x in g(P) when g(P) <= P",
        lambda i, x: x in filter_sets[g[i]] and alg.delta(x) not in filter_sets[g[i]],
    )

    return {
        "filters": [
            {"name": names[i], "members": [alg.elements[x] for x in filters[i]]}
            for i in range(len(filters))
        ],
        "chains": [[names[i] for i in chain] for chain in chains],
        "involution": [names[gi] for gi in g],
        "embedding": [
            {
                "element": alg.elements[x],
                "lower": fspace.ids(h[x][0]),
                "upper": fspace.ids(h[x][1]),
            }
            for x in range(n)
        ],
        "checks": checks,
    }


# ---------------------------------------------------------------------------


def write(name: str, content: str):
    (GOLDEN / name).write_text(content, encoding="utf-8")
    print("wrote", GOLDEN / name)


def main():
    GOLDEN.mkdir(exist_ok=True)

    fixture_bytes = (FIXTURES / "fixture.csv").read_bytes()
    space = parse_table(fixture_bytes.decode())

    write(
        "partition_fixture.json",
        dumps(
            {
                "universe": space.objects,
                "blocks": [space.ids(b) for b in space.block_masks],
            }
        ),
    )

    a13 = space.mask_of(["1", "3"])
    write(
        "approx_fixture_1_3.json",
        dumps({"lower": space.ids(space.lower(a13)), "upper": space.ids(space.upper(a13))}),
    )

    write("membership_fixture_1_3.json", dumps(membership_entries(space, a13)))
    write("membership_fixture_1_3_obj1.json", dumps(membership_entries(space, a13)[0]))

    write("quotient_fixture.json", dumps(quotient_algebra(space)))
    single = parse_table((FIXTURES / "single_block.csv").read_text())
    write("quotient_single_block.json", dumps(quotient_algebra(single)))

    alg = Algebra(json.loads((FIXTURES / "three_chain.json").read_text()))
    write("represent_three_chain.json", dumps(representation(alg)))

    checks = membership_suite(space)
    write(
        "verify_membership_fixture.json",
        dumps(
            {
                "command": "verify",
                "suite": "membership",
                "inputs": [{"path": "fixture.csv", "digest": fnv1a64(fixture_bytes)}],
                "checks": checks,
                "passed": all(c["status"] == "pass" for c in checks),
            }
        ),
    )


if __name__ == "__main__":
    main()

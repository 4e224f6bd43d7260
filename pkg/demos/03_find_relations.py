"""Recover the relations in degrees 1-3 from the pairing with complementary monomials."""

from stablemaps.relations import pairing_matrix, relation_space, verify_named_relations

for k in (1, 2, 3):
    m = pairing_matrix(k)
    rs = relation_space(m)
    print(f"degree {k}: {len(m.rows)} candidates, rank {m.rank()}, {rs.dimension} relation(s)")
    for r in rs.to_strings():
        print("   ", r, "= 0")

report = verify_named_relations()
for r in report["relations"]:
    print(f"{r.name} -> {tuple(str(x) for x in r.vector)}  in span: {r.member}")

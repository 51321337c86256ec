"""
Quick Start Script - Test your Topological Graph Kit installation

Runs a few corpus graphs through the main operations.
"""

from tgk import (
    a_sequence,
    af_block_check,
    build_path_rep,
    enumerate_admissible_pairs,
    is_simple,
    prime_ideals,
    verify_ck_pair,
)
from tgk.corpus import cycle_graph, edge_graph, loop_entrance_graph


def main():
    print("🔷 Topological Graph Kit - Quick Start Test")
    print("=" * 50)

    print("\n1. Simplicity verdicts...")
    print(f"✓ edge u -> w simple: {is_simple(edge_graph()).value}")
    verdict = is_simple(cycle_graph(3))
    print(f"✓ 3-cycle simple: {verdict.value} ({verdict.witness['reason']})")

    print("\n2. Ideal lattice...")
    lattice = enumerate_admissible_pairs(loop_entrance_graph())
    for pair in lattice.pairs:
        print(f"  • {pair.label()}")

    print("\n3. Prime ideals...")
    for descriptor in prime_ideals(loop_entrance_graph()):
        print(f"  • {descriptor.kind.value}: {descriptor.pair.label()}")

    print("\n4. Path representation at u...")
    report = verify_ck_pair(build_path_rep(edge_graph(), "u"))
    if not report.cuntz_krieger_ok:
        print(f"❌ Cuntz-Krieger relations fail: {report.to_dict()['failures']}")
        return
    print("✓ Cuntz-Krieger relations hold")

    print("\n5. AF blocks of the subset graph...")
    print(f"✓ a(0..4) = {[a_sequence(m) for m in range(5)]}")
    af = af_block_check(2)
    if not af.ok:
        print(f"❌ AF check failed for n = 2: {af.to_dict()}")
        return
    print(f"✓ n = 2: {len(af.blocks)} blocks, total dimension {af.total_dimension}")

    print("\n" + "=" * 50)
    print("✅ Everything is working correctly!")
    print("\nNext steps:")
    print("  tgk analyze --corpus cycle:3")
    print("  tgk selfcheck --graphs 100")


if __name__ == "__main__":
    main()

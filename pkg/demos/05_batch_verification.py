"""Batch verification over graph6 corpora, the way the CLI drives it.

A verification run plays a class strategy against the optimal adversary on
every corpus graph and aggregates the outcomes; a lost game would be a
counterexample to the class theorem, so a clean report is the point.
"""

import itertools

from indicated.game import play_match
from indicated.graphs import complete_expansion, make_named, parse_graph6, write_graph6
from indicated.reports import exit_code, make_report, match_record, serialize_report
from indicated.strategies import STRATEGY_REGISTRY
from indicated.structure import chi_formula_kc5, recognize_expansion

c5 = make_named("C", 5)

# A small corpus: every complete expansion of C5 with part sizes 1 or 2, as
# graph6 lines (exactly what an external enumeration tool would feed in).
lines = [write_graph6(complete_expansion(c5, m))
         for m in itertools.product((1, 2), repeat=5)]
print(f"corpus: {len(lines)} graphs")

# Verify the expansion strategy at its bound and one above.
factory = STRATEGY_REGISTRY["kc5"]
records = []
for line in lines:
    g = parse_graph6(line)
    structure = recognize_expansion(g, c5, allowed=("complete",))
    chi = chi_formula_kc5(structure.sizes)
    for k in (chi, chi + 1):
        match = play_match(g, k, factory(g, k), solve_limit=16)
        records.append(match_record(match, graph6=line, strategy="kc5"))

report = make_report("verify_class", records, extra={"class": "kc5"})
print("failures:", report["summary"]["failures"],
      "exit code:", exit_code(report))

# Reports serialize deterministically (sorted keys, no timestamps), so a
# second run produces byte-identical output.
text = serialize_report(report)
print("report bytes:", len(text), "first record:",
      report["records"][0]["graph6"], report["records"][0]["outcome"])

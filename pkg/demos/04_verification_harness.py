"""Run a verification suite programmatically and inspect the report.

Same machinery the CLI uses: a SuiteConfig, a list of claim reports, and a
canonical JSON rendering that is byte-stable across runs.
"""

import json

from symprep.records import SuiteConfig, reports_to_json, summarize
from symprep.suites import run_suite

config = SuiteConfig(max_n=7, grid=(("SL", 4, 2), ("Sp", 3, 3), ("SOeven", 4, 2)))

for suite in ("dickson", "lietype"):
    reports, code = run_suite(suite, config)
    print(f"{suite}: {len(reports)} claims, exit code {code}, "
          f"summary {summarize(reports)}")
    for r in reports[:4]:
        print(f"  [{r.status}] {r.claim_id}: computed {r.computed}")

# the canonical JSON document, as `symprep verify` would write it
reports, _ = run_suite("lietype", config)
doc = json.loads(reports_to_json("lietype", config, reports))
print("\ntop-level keys:", sorted(doc))
print("first claim record:")
print(json.dumps(doc["claims"][0], indent=2))

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

# criterion number -> (passed, detail); filled in by test_acceptance.py
ACCEPTANCE = {}

TITLES = {
    1: "band family C_n(1..d), n <= 18",
    2: "cubic family C_m(a, m/2), m <= 18",
    3: "quartic family C_n(a, b), n <= 14",
    4: "C_n(1,2) W2 window, 4 <= n <= 12",
    5: "SQC corpus, up to 3 parts, <= 16 vertices",
    6: "homology engine oracle",
    7: "cross-identities, n <= 8",
    8: "cycles, complete graphs, connected bipartite graphs",
}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(TITLES):
        if k not in ACCEPTANCE:
            terminalreporter.write_line(f"[{k}] NOT RUN  {TITLES[k]}")
            continue
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"[{k}] {'PASS' if ok else 'FAIL'}  {TITLES[k]}: {detail}")

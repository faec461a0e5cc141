from hypothesis import strategies as st

from lrcex.partition import Partition

# criterion id -> (description, passed, seconds, limit); filled by test_acceptance
CRITERIA: dict[int, tuple[str, bool, float, float]] = {}


def _draw_partition_of(draw, size):
    parts = []
    left, cap = size, size
    while left > 0:
        p = draw(st.integers(min_value=1, max_value=min(cap, left)))
        parts.append(p)
        left -= p
        cap = p
    return Partition(parts)


@st.composite
def partitions_of(draw, size):
    return _draw_partition_of(draw, size)


@st.composite
def partitions(draw, max_size=14):
    """A random partition with |p| <= max_size."""
    size = draw(st.integers(min_value=0, max_value=max_size))
    return _draw_partition_of(draw, size)


@st.composite
def lr_triples(draw, max_size=14):
    """(lam, mu, nu) with mu inside lam and |nu| = |lam| - |mu|."""
    lam = draw(partitions(max_size=max_size))
    mu = []
    cap = lam[0] if lam else 0
    for part in lam:
        v = draw(st.integers(min_value=0, max_value=min(part, cap)))
        mu.append(v)
        cap = v
    mu = Partition(mu)
    rest = lam.size - mu.size
    nu = draw(partitions_of(rest))
    return lam, mu, nu


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        desc, passed, secs, limit = CRITERIA[k]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {k:2d}: {desc} ({secs:.3f} s, limit {limit:g} s)")

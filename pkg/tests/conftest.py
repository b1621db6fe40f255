import pytest

from rolerank import parse_hierarchy

H1_TEXT = """\
# three-role reference hierarchy
permission p1
permission p2
permission p3
permission p4
role r1
role r2
role r3
grant r1 p1
grant r1 p2
grant r2 p1
grant r2 p2
grant r2 p3
grant r2 p4
grant r3 p3
dominates r1 r3
"""

H1_DANGER_TEXT = H1_TEXT + "danger p3\ndanger p4\n"


@pytest.fixture(scope="session")
def h1():
    return parse_hierarchy(H1_TEXT)


@pytest.fixture(scope="session")
def h1_danger():
    return parse_hierarchy(H1_DANGER_TEXT)


@pytest.fixture()
def h1_path(tmp_path):
    path = tmp_path / "h1.rhf"
    path.write_text(H1_TEXT, encoding="utf-8")
    return path

from sys import version_info

from pytest import fixture

from mzvlab import Version, __version__


@fixture(scope="module")
def version_from_str() -> Version:
    return Version.from_str("1.2.3", project_name="mzvlab")


def test_version_from_sys():
    version = Version.from_sys()
    assert version.major == version_info.major
    assert version.minor == version_info.minor
    assert version.patch == version_info.micro
    assert version.project_name == "Python"


def test_version_from_pyproject():
    version = Version.from_pyproject()
    assert version.project_name == "mzvlab"
    assert str(version) == __version__


def test_version_current():
    assert Version.current() == Version.from_pyproject()
    assert repr(Version.current()) == f"mzvlab v{__version__}"


def test_version_from_str_init(version_from_str: Version):
    assert version_from_str.major == 1
    assert version_from_str.minor == 2
    assert version_from_str.patch == 3
    assert version_from_str == Version(1, 2, 3)
    assert version_from_str != Version(1, 2, 4)


def test_version_from_str_repr(version_from_str: Version):
    assert repr(version_from_str) == "mzvlab v1.2.3"

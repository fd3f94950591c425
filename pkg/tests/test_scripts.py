import runpy
from pathlib import Path

SCRIPTS = Path(__file__).parent.parent / "scripts"


def load(name):
    return runpy.run_path(str(SCRIPTS / name))


def test_crosscheck_script(fixtures_dir, capsys):
    main = load("crosscheck_scan.py")["main"]
    assert main([str(fixtures_dir / "hexagon.json"), "--q-max", "2", "--p-max", "3"]) == 0
    assert main([str(fixtures_dir / "p123.json"), "--q-max", "3", "--p-max", "2"]) == 2
    assert "pairings=(3, 3, 1)" in capsys.readouterr().out


def test_surface_tables_script(capsys):
    load("surface_tables.py")["main"](["--n-max", "2", "--window", "8", "--poisson-window", "4"])
    out = capsys.readouterr().out
    assert "n=2: T1 nonzero at [(2, 2), (3, 3)]" in out and "H1=2 H2=2" in out


def test_extension_script(capsys):
    load("mc_extension_demo.py")["main"](["--window", "4"])
    out = capsys.readouterr().out
    assert out.count("mc=True") == 2

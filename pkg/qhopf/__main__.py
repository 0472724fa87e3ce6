from qhopf.cli import run

run()

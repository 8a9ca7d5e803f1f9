"""Tour of the command-line interface, run in-process so the demo can
show exit codes next to the output.  The same commands work from a
shell once the package is installed:

    algebroid decide curve.ideal --json
    algebroid semigroup curve.ideal
    algebroid verify report.json

Run with: python3 demos/cli_tour.py
"""

import contextlib
import io
import json
import tempfile
from pathlib import Path

from algebroid.cli import main

CUSP = """\
# the cuspidal cubic
char 0
vars x y
ideal:
x^3 - y^2
"""

DOUBLE_BRANCH = """\
char 0
vars x y
ideal:
(y^2 - x^3)^2 - x^7
"""


def run(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def main_demo():
    with tempfile.TemporaryDirectory() as tmp:
        cusp = Path(tmp, "cusp.ideal")
        cusp.write_text(CUSP)
        double = Path(tmp, "double.ideal")
        double.write_text(DOUBLE_BRANCH)

        for argv in (
            ("semigroup", str(cusp)),
            ("int", str(cusp), "--poly", "x + y"),
            ("tropism", str(cusp), "--weights", "2,3"),
            ("decide", str(double)),
        ):
            code, out = run(*argv)
            print("$ algebroid", " ".join(argv))
            print(out, end="")
            print("exit code:", code)
            print()

        # JSON reports round-trip through the verifier.
        code, out = run("decide", "--json", str(double))
        report = Path(tmp, "report.json")
        report.write_text(out)
        print("$ algebroid decide --json double.ideal > report.json")
        doc = json.loads(out)
        print("emitted kind:", doc["certificate"]["kind"],
              "rays:", doc["certificate"]["data"])
        print("exit code:", code)
        print()

        code, out = run("verify", str(report))
        print("$ algebroid verify report.json")
        print(out, end="")
        print("exit code:", code)


if __name__ == "__main__":
    main_demo()

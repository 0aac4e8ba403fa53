import subprocess
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


@pytest.mark.parametrize("argv,expect", [
    (["purity_sweep.py", "--r", "3", "--e", "3"], "{'NotPure': 9, 'Pure': 20}"),
    (["purity_sweep.py", "--r", "3", "--e", "3", "--raw"], "{'NotPure': 9, 'Pure': 20}"),
    (["socle3_census.py", "--max-r", "3", "--max-t", "2"], "29"),
    (["icp_box.py", "--bound", "5"], "0 slices with gaps"),
    (["type2_wlp_sample.py", "--samples", "10"], "0 fail the WLP"),
])
def test_script_runs(argv, expect):
    out = subprocess.run([sys.executable, str(SCRIPTS / argv[0])] + argv[1:], capture_output=True, text=True,
                         check=True).stdout
    assert expect in out

"""Certificates as JSON, and checking them without factoring anything."""
import json
import subprocess
import sys
import tempfile

from twosquares import certificate as certio
from twosquares.pell import iter_ap_certificates

cert = list(zip(range(3), iter_ap_certificates(only_1_mod_18=True)))[-1][1]
text = certio.dumps(cert, indent=2)
print(text[:400], "...")

# Parsing gives back an identical object; checking is pure arithmetic.
again = certio.loads(text)
print("round trip equal:", again == cert, " verifies:", again.verify())

# Break one digit of one rep and the check fails.
doc = json.loads(text)
doc["terms"][2]["rep"][0] = doc["terms"][2]["rep"][0][:-1] + "0"
print("perturbed:", certio.document_failures(doc)[:1])

# The same check from the command line.
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    fh.write(text)
proc = subprocess.run([sys.executable, "-m", "twosquares", "verify-cert", fh.name],
                      capture_output=True, text=True)
print("verify-cert exit", proc.returncode, proc.stdout.strip())

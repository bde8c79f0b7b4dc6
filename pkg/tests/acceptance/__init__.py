import os
import unittest

ENABLED = os.environ.get("HSBNN_ACCEPTANCE") == "1"
SEEDS = [0, 1, 2, 3, 4]
REQUIRED_PASSES = 4

acceptance = unittest.skipUnless(ENABLED, "set HSBNN_ACCEPTANCE=1 to run")

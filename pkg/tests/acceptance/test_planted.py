import unittest

from hsbnn.experiments import ExperimentOptions, PlantedPruningExperiment
from hsbnn.model.config import GAUSSIAN_BASELINE, HS_NONCENTERED

from . import REQUIRED_PASSES, SEEDS, acceptance


@acceptance
class TestPlantedPruning(unittest.TestCase):
    def run_width(self, width):
        options = ExperimentOptions(
            widths=[width],
            modes=[HS_NONCENTERED, GAUSSIAN_BASELINE],
            replicates=len(SEEDS),
            workers=len(SEEDS),
        )
        records = PlantedPruningExperiment().run(options).records
        return {
            mode: [r["active_units"] for r in records if r["mode"] == mode]
            for mode in (HS_NONCENTERED, GAUSSIAN_BASELINE)
        }

    def test_fifteen_units_prune_to_the_planted_two(self):
        active = self.run_width(15)

        recovered = sum(a == 2 for a in active[HS_NONCENTERED])
        self.assertGreaterEqual(recovered, REQUIRED_PASSES)
        unpruned = sum(a > 5 for a in active[GAUSSIAN_BASELINE])
        self.assertGreaterEqual(unpruned, REQUIRED_PASSES)

    def test_hundred_units_prune_to_the_planted_two(self):
        active = self.run_width(100)

        recovered = sum(a == 2 for a in active[HS_NONCENTERED])
        self.assertGreaterEqual(recovered, REQUIRED_PASSES)

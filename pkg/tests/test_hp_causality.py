"""
Tests for the actual-cause definition: witness search, AC1/AC2/AC3, the
but-for test, cause enumeration, paths and verdict comparison
"""

import unittest

from causet.causality import (CauseCandidate, Clause, Witness, but_for, check_ac1,
                              compare_verdicts, directed_paths, enumerate_causes, find_witness,
                              is_actual_cause, iter_witnesses, verify_witness)
from causet.corpus import load_fixture
from causet.dsl import parse_boolean, parse_candidate, parse_model
from causet.errors import (EffectNotSatisfied, FormulaError, PreconditionError,
                           SearchSpaceTooLarge, WitnessStructureError)


class FixtureCase(unittest.TestCase):
    fixture_name = None

    def setUp(self):
        self.fixture = load_fixture(self.fixture_name)
        self.model = self.fixture.document.model
        self.signature = self.model.signature
        self.context = self.fixture.default_context

    def candidate(self, text):
        return parse_candidate(text, self.signature)

    def effect(self, text):
        return parse_boolean(text, self.signature)

    def verdict(self, cause, effect, context=None):
        return is_actual_cause(self.model, context or self.context, self.candidate(cause),
                               self.effect(effect))


class TestDisjunctiveForestFire(FixtureCase):
    fixture_name = 'forest-fire-disjunctive'

    def test_lightning_is_a_cause_with_canonical_witness(self):
        verdict = self.verdict('L=1', 'F=1')
        self.assertTrue(verdict.is_cause)
        self.assertIsNone(verdict.failed_clause)
        self.assertEqual(verdict.witness, Witness(
            z_set=('L', 'F'), w_set=('ML',), x_prime=(('L', 0),), w_values=(('ML', 0),),
            z_star=(('L', 1), ('F', 1)),
        ))
        stats = verdict.statistics
        self.assertEqual((stats.partitions, stats.settings, stats.subset_checks,
                          stats.normality_checks), (2, 2, 4, 0))

    def test_lightning_alone_is_but_for(self):
        context = self.fixture.context('lightning-only')
        self.assertTrue(but_for(self.model, context, self.candidate('L=1'), self.effect('F=1')))
        self.assertTrue(self.verdict('L=1', 'F=1', context).is_cause)

    def test_overdetermination_is_not_but_for(self):
        self.assertFalse(but_for(self.model, self.context, self.candidate('L=1'),
                                 self.effect('F=1')))

    def test_ac1_failure(self):
        context = self.fixture.context('lightning-only')
        verdict = self.verdict('ML=1', 'F=1', context)
        self.assertFalse(verdict.is_cause)
        self.assertEqual(verdict.failed_clause, Clause.AC1)
        self.assertFalse(check_ac1(self.model, context, self.candidate('ML=1'),
                                   self.effect('F=1')))

    def test_conjunction_of_both_fails_ac3(self):
        verdict = self.verdict('L=1 & ML=1', 'F=1')
        self.assertFalse(verdict.is_cause)
        self.assertEqual(verdict.failed_clause, Clause.AC3)
        self.assertEqual(verdict.ac3_blocker, CauseCandidate((('L', 1),)))

    def test_enumerate_causes(self):
        found = enumerate_causes(self.model, self.context, self.effect('F=1'))
        self.assertEqual([str(c) for c, _ in found], ['L=1', 'ML=1'])
        self.assertEqual(found[1][1].w_set, ('L',))
        self.assertEqual(found[1][1].z_set, ('ML', 'F'))

    def test_enumerate_causes_skips_supersets(self):
        found = enumerate_causes(self.model, self.context, self.effect('F=1'), max_conjuncts=3,
                                 exclude_effect_variables=False)
        self.assertEqual([str(c) for c, _ in found], ['L=1', 'ML=1', 'F=1'])

    def test_enumerate_requires_effect_in_actual_world(self):
        with self.assertRaises(EffectNotSatisfied):
            enumerate_causes(self.model, self.context, self.effect('F=0'))
        with self.assertRaises(PreconditionError):
            enumerate_causes(self.model, self.context, self.effect('F=1'), max_conjuncts=0)

    def test_effect_overlap_can_be_refused(self):
        with self.assertRaises(PreconditionError):
            is_actual_cause(self.model, self.context, self.candidate('F=1'), self.effect('F=1'),
                            exclude_effect_variables=True)

    def test_candidate_checks(self):
        for candidate in (CauseCandidate(()), CauseCandidate((('L', 1), ('L', 1))),
                          CauseCandidate((('U_L', 1),)), CauseCandidate((('L', 3),))):
            with self.subTest(candidate=candidate):
                with self.assertRaises(FormulaError):
                    is_actual_cause(self.model, self.context, candidate, self.effect('F=1'))

    def test_search_cap(self):
        with self.assertRaises(SearchSpaceTooLarge):
            is_actual_cause(self.model, self.context, self.candidate('L=1'), self.effect('F=1'),
                            max_vars=2)


class TestConjunctiveForestFire(FixtureCase):
    fixture_name = 'forest-fire-conjunctive'

    def test_each_conjunct_is_but_for(self):
        for cause in ('L=1', 'ML=1'):
            with self.subTest(cause=cause):
                verdict = self.verdict(cause, 'F=1')
                self.assertTrue(verdict.is_cause)
                self.assertEqual(verdict.witness.w_set, ())

    def test_witness_with_contingency_is_also_found(self):
        candidate, effect = self.candidate('L=1'), self.effect('F=1')
        witnesses = list(iter_witnesses(self.model, self.context, candidate, effect))
        self.assertEqual(witnesses[0].w_set, ())
        self.assertIn(Witness(('L', 'F'), ('ML',), (('L', 0),), (('ML', 1),),
                              (('L', 1), ('F', 1))), witnesses)
        check = verify_witness(self.model, self.context, candidate, effect, Witness(
            ('L', 'F'), ('ML',), (('L', 0),), (('ML', 1),), (('L', 1), ('F', 1))))
        self.assertTrue(check.passed)

    def test_failing_witness_reports_counterexample(self):
        # Setting ML to 0 in W makes AC2(b) fail at W' = {ML}.
        check = verify_witness(self.model, self.context, self.candidate('L=1'),
                               self.effect('F=1'),
                               Witness(('L', 'F'), ('ML',), (('L', 0),), (('ML', 0),),
                                       (('L', 1), ('F', 1))))
        self.assertTrue(check.ac2a)
        self.assertFalse(check.ac2b)
        self.assertEqual(check.counterexample, (('ML',), ()))

    def test_malformed_witnesses_rejected(self):
        candidate, effect = self.candidate('L=1'), self.effect('F=1')
        malformed = (
            Witness(('L', 'F', 'ML'), ('ML',), (('L', 0),), (('ML', 0),),
                    (('L', 1), ('F', 1), ('ML', 1))),
            Witness(('L',), ('ML',), (('L', 0),), (('ML', 0),), (('L', 1),)),
            Witness(('F', 'ML'), ('L',), (('L', 0),), (('L', 0),), (('F', 1), ('ML', 1))),
            Witness(('L', 'F'), ('ML',), (('L', 0),), (('ML', 0),), (('L', 1), ('F', 0))),
            Witness(('L', 'F'), ('ML',), (('L', 2),), (('ML', 0),), (('L', 1), ('F', 1))),
        )
        for witness in malformed:
            with self.subTest(witness=witness):
                with self.assertRaises(WitnessStructureError):
                    verify_witness(self.model, self.context, candidate, effect, witness)

    def test_zero_match_causes_no_fire(self):
        context = self.fixture.context('lightning-only')
        self.assertTrue(self.verdict('ML=0', 'F=0', context).is_cause)
        self.assertFalse(self.verdict('L=1', 'F=0', context).is_cause)


class TestRockThrow(FixtureCase):
    fixture_name = 'rock-throw-5var'

    def test_suzy_is_a_cause(self):
        verdict = self.verdict('ST=1', 'BS=1')
        self.assertTrue(verdict.is_cause)
        self.assertEqual(verdict.witness.w_set, ('BT',))
        self.assertEqual(verdict.witness.w_values, (('BT', 0),))

    def test_billy_is_not_and_the_rejection_is_explained(self):
        verdict = self.verdict('BT=1', 'BS=1')
        self.assertFalse(verdict.is_cause)
        self.assertEqual(verdict.failed_clause, Clause.AC2)
        rejected = verdict.rejected
        self.assertIsNotNone(rejected)
        self.assertEqual(rejected.witness.w_set, ('ST',))
        self.assertEqual(rejected.witness.w_values, (('ST', 0),))
        self.assertTrue(rejected.ac2a)
        self.assertFalse(rejected.ac2b)
        self.assertEqual(rejected.counterexample, (('ST',), ('BH',)))

    def test_find_witness(self):
        witness = find_witness(self.model, self.context, self.candidate('SH=1'),
                               self.effect('BS=1'))
        self.assertIsNotNone(witness)
        self.assertIsNone(find_witness(self.model, self.context, self.candidate('BT=1'),
                                       self.effect('BS=1')))
        with self.assertRaises(PreconditionError):
            find_witness(self.model, self.context, self.candidate('BH=1'), self.effect('BS=1'))

    def test_directed_paths(self):
        self.assertEqual(directed_paths(self.model, 'ST', 'BS'),
                         [['ST', 'SH', 'BS'], ['ST', 'SH', 'BH', 'BS']])
        self.assertEqual(directed_paths(self.model, 'U_BT', 'BS'),
                         [['U_BT', 'BT', 'BH', 'BS']])
        self.assertEqual(directed_paths(self.model, 'BS', 'ST'), [])
        self.assertEqual(directed_paths(self.model, 'BS', 'BS'), [['BS']])
        with self.assertRaises(FormulaError):
            directed_paths(self.model, 'ST', 'NOPE')


class TestSingleVariable(unittest.TestCase):
    """The candidate variable is the effect variable and nothing else is endogenous."""

    def setUp(self):
        self.model = parse_model("model single { exogenous { U: {0,1} } "
                                 "endogenous { X: {0,1} } equations { X = U } }").model
        self.context = {'U': 1}
        self.candidate = parse_candidate('X=1', self.model.signature)
        self.effect = parse_boolean('X=1', self.model.signature)

    def test_witness_moves_the_variable_itself(self):
        witness = find_witness(self.model, self.context, self.candidate, self.effect)
        self.assertEqual(witness, Witness(('X',), (), (('X', 0),), (), (('X', 1),)))

    def test_event_causes_itself_unless_effect_variables_are_excluded(self):
        verdict = is_actual_cause(self.model, self.context, self.candidate, self.effect,
                                  exclude_effect_variables=False)
        self.assertTrue(verdict.is_cause)
        self.assertEqual(verdict.witness.w_set, ())
        self.assertTrue(but_for(self.model, self.context, self.candidate, self.effect))
        with self.assertRaises(PreconditionError):
            is_actual_cause(self.model, self.context, self.candidate, self.effect,
                            exclude_effect_variables=True)

    def test_enumeration_skips_effect_variables_by_default(self):
        self.assertEqual(enumerate_causes(self.model, self.context, self.effect), [])
        found = enumerate_causes(self.model, self.context, self.effect,
                                 exclude_effect_variables=False)
        self.assertEqual([str(c) for c, _ in found], ['X=1'])


class TestCompareVerdicts(unittest.TestCase):
    def setUp(self):
        self.candidate = CauseCandidate((('BT', 1),))
        self.effect = parse_boolean('BS=1', None)
        self.three = load_fixture('rock-throw-3var')
        self.five = load_fixture('rock-throw-5var')

    def test_refining_the_rock_throw_flips_billy(self):
        report = compare_verdicts(
            [self.three.document.model, self.five.document.model],
            [self.three.default_context, self.five.default_context],
            self.candidate, self.effect,
        )
        self.assertFalse(report.stable)
        self.assertEqual([row.verdict.is_cause for row in report.rows], [True, False])
        self.assertEqual(report.topology_changed, (True,))
        self.assertEqual(report.rows[0].topology[('BT', 'BS')], (('BT', 'BS'),))

    def test_same_model_twice_is_stable(self):
        model = self.five.document.model
        report = compare_verdicts([model, model], [self.five.default_context] * 2,
                                  CauseCandidate((('ST', 1),)), self.effect)
        self.assertTrue(report.stable)
        self.assertEqual(report.topology_changed, (False,))

    def test_switch_topology_unchanged_but_verdict_flips(self):
        simple, blocked = load_fixture('train-simple'), load_fixture('train-blocked')
        report = compare_verdicts(
            [simple.document.model, blocked.document.model],
            [simple.default_context, blocked.default_context],
            CauseCandidate((('S', 1),)), parse_boolean('A=1', None),
        )
        self.assertFalse(report.stable)
        self.assertEqual([row.verdict.is_cause for row in report.rows], [False, True])
        self.assertEqual(report.topology_changed, (False,))

    def test_row_errors_make_the_table_unstable(self):
        fire = load_fixture('forest-fire-disjunctive')
        report = compare_verdicts(
            [self.five.document.model, fire.document.model],
            [self.five.default_context, fire.default_context],
            self.candidate, self.effect,
        )
        self.assertFalse(report.stable)
        self.assertIsNone(report.rows[1].verdict)
        self.assertIn('BT', report.rows[1].error)


if __name__ == '__main__':
    unittest.main()

"""
Tests for solving, interventions and formula satisfaction
"""

import unittest

from causet.corpus import fixture_source, load_fixture
from causet.dsl import parse_formula, parse_model
from causet.errors import (ContextError, FormulaError, InterventionError, InvalidModelError,
                           SearchSpaceTooLarge)
from causet.semantics import (CausalFormula, CounterfactualEvaluator, PrimitiveEvent, contexts,
                              intervene, satisfies, satisfies_all_contexts, solve,
                              solve_by_enumeration, worlds)


class TestSolve(unittest.TestCase):
    def setUp(self):
        self.model = load_fixture('forest-fire-disjunctive').document.model
        self.context = {'U_L': 1, 'U_ML': 1}

    def test_actual_world(self):
        self.assertEqual(solve(self.model, self.context),
                         {'U_L': 1, 'U_ML': 1, 'L': 1, 'ML': 1, 'F': 1})

    def test_enumeration_agrees_on_every_fixture(self):
        for fixture in (load_fixture(n) for n in ('rock-throw-5var', 'soldiers-trumping',
                                                   'door-alarm', 'doctors')):
            for context in contexts(fixture.document.model.signature):
                with self.subTest(fixture=fixture.name, context=context):
                    self.assertEqual(solve(fixture.document.model, context),
                                     solve_by_enumeration(fixture.document.model, context))

    def test_partial_context_rejected(self):
        with self.assertRaises(ContextError) as caught:
            solve(self.model, {'U_L': 1})
        self.assertEqual(caught.exception.missing, ('U_ML',))

    def test_cyclic_model_has_no_solution(self):
        cyclic = parse_model(fixture_source('camping-cyclic'), validate=False).model
        with self.assertRaises(InvalidModelError):
            solve(cyclic, {})
        with self.assertRaises(InvalidModelError):
            solve_by_enumeration(cyclic, {})


class TestIntervene(unittest.TestCase):
    def setUp(self):
        self.model = load_fixture('rock-throw-5var').document.model
        self.context = {'U_ST': 1, 'U_BT': 1}

    def test_surgery_replaces_only_the_listed_mechanisms(self):
        changed = intervene(self.model, {'SH': 0})
        self.assertEqual(changed.equations['BH'], self.model.equations['BH'])
        self.assertNotEqual(changed.equations['SH'], self.model.equations['SH'])
        world = solve(changed, self.context)
        self.assertEqual((world['ST'], world['SH'], world['BH'], world['BS']), (1, 0, 1, 1))

    def test_original_model_is_untouched(self):
        intervene(self.model, {'ST': 0})
        self.assertEqual(solve(self.model, self.context)['SH'], 1)

    def test_rejects_bad_settings(self):
        for settings in ({'U_ST': 0}, {'NOPE': 0}, {'ST': 2}, [('ST', 0), ('ST', 1)]):
            with self.subTest(settings=settings):
                with self.assertRaises(InterventionError):
                    intervene(self.model, settings)


class TestSatisfies(unittest.TestCase):
    def setUp(self):
        self.model = load_fixture('forest-fire-disjunctive').document.model
        self.signature = self.model.signature
        self.context = {'U_L': 1, 'U_ML': 1}

    def check(self, text):
        return satisfies(self.model, self.context, parse_formula(text, self.signature))

    def test_worked_formulas(self):
        self.assertTrue(self.check('[ML<-0](F=1)'))
        self.assertTrue(self.check('[L<-0, ML<-0](F=0)'))
        self.assertFalse(self.check('F=0'))
        self.assertTrue(self.check('L=1 & !(F=0)'))

    def test_intervention_on_exogenous_rejected(self):
        formula = CausalFormula((('U_L', 0),), PrimitiveEvent('F', 1))
        with self.assertRaises(FormulaError):
            satisfies(self.model, self.context, formula)

    def test_satisfies_all_contexts(self):
        self.assertTrue(satisfies_all_contexts(
            self.model, parse_formula('[L<-1](F=1)', self.signature)))
        self.assertFalse(satisfies_all_contexts(
            self.model, parse_formula('F=1', self.signature)))

    def test_enumeration_caps(self):
        with self.assertRaises(SearchSpaceTooLarge):
            list(contexts(self.signature, cap=3))
        self.assertEqual(len(list(worlds(self.signature, cap=32))), 32)
        fixed = list(worlds(self.signature, cap=8, fixed={'L': 0, 'F': 1}))
        self.assertEqual(len(fixed), 8)
        self.assertTrue(all(w['L'] == 0 and w['F'] == 1 for w in fixed))
        self.assertEqual(list(fixed[0]), list(self.signature.names))
        with self.assertRaises(SearchSpaceTooLarge):
            satisfies_all_contexts(self.model, parse_formula('F=1', self.signature),
                                   max_contexts=2)


class TestCounterfactualEvaluator(unittest.TestCase):
    def test_memoizes_by_settings(self):
        model = load_fixture('rock-throw-5var').document.model
        evaluator = CounterfactualEvaluator(model, {'U_ST': 1, 'U_BT': 1})
        first = evaluator.world({'ST': 0, 'BT': 0})
        self.assertIs(evaluator.world({'BT': 0, 'ST': 0}), first)
        self.assertEqual(first['BS'], 0)
        self.assertTrue(evaluator.holds({'ST': 0}, PrimitiveEvent('BS', 1)))
        self.assertEqual(evaluator.actual['BH'], 0)


if __name__ == '__main__':
    unittest.main()

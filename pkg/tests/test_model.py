"""
Tests for signatures, validation, the dependency graph and model transforms
"""

import unittest

from causet.corpus import fixture_source, load_fixture
from causet.dsl import parse_model
from causet.errors import ContextError, InvalidModelError
from causet.expr import BinOp, Const, Var
from causet.model import (CausalModel, Mechanism, Range, Signature, ViolationKind, check_context,
                          dependency_graph, find_isomorphism, recode_values, rename_variables,
                          topological_order, validate_model)
from causet.semantics import solve


def fire_signature():
    return Signature.build({'U_L': (0, 1), 'U_ML': (0, 1)}, {'L': (0, 1), 'ML': (0, 1), 'F': (0, 1)})


def fire_model(body):
    mechanisms = (Mechanism('L', Var('U_L')), Mechanism('ML', Var('U_ML')), Mechanism('F', body))
    return CausalModel(fire_signature(), mechanisms, 'fire')


class TestSignature(unittest.TestCase):
    def setUp(self):
        self.signature = fire_signature()

    def test_declaration_order(self):
        self.assertEqual(self.signature.names, ('U_L', 'U_ML', 'L', 'ML', 'F'))
        self.assertEqual(self.signature.sort(['F', 'U_ML', 'L']), ['U_ML', 'L', 'F'])
        self.assertTrue(self.signature.is_exogenous('U_L'))
        self.assertTrue(self.signature.is_endogenous('F'))

    def test_range_helpers(self):
        self.assertEqual(Range.interval(0, 2).values, (0, 1, 2))
        self.assertIn(1, Range.boolean())
        self.assertNotIn(2, Range.boolean())

    def test_check_context(self):
        self.assertEqual(check_context(self.signature, {'U_ML': 0, 'U_L': 1}),
                         {'U_L': 1, 'U_ML': 0})

    def test_partial_context_names_missing_variables(self):
        with self.assertRaises(ContextError) as caught:
            check_context(self.signature, {'U_L': 1})
        self.assertEqual(caught.exception.missing, ('U_ML',))

    def test_context_rejects_endogenous_and_out_of_range(self):
        with self.assertRaises(ContextError):
            check_context(self.signature, {'U_L': 1, 'U_ML': 1, 'F': 1})
        with self.assertRaises(ContextError):
            check_context(self.signature, {'U_L': 1, 'U_ML': 2})


class TestValidation(unittest.TestCase):
    def test_fixtures_are_valid(self):
        for name in ('forest-fire-disjunctive', 'rock-throw-5var', 'soldiers-trumping'):
            with self.subTest(name=name):
                report = validate_model(load_fixture(name).document.model)
                self.assertTrue(report.is_valid)
                self.assertEqual(len(report), 0)

    def test_cycle_reported_as_closed_path(self):
        document = parse_model(fixture_source('camping-cyclic'), validate=False)
        report = validate_model(document.model)
        self.assertFalse(report.is_valid)
        cycles = report.of_kind(ViolationKind.CYCLE)
        self.assertEqual(len(cycles), 1)
        self.assertEqual(cycles[0].cycle, ('C', 'F', 'C'))

    def test_three_valued_variant_is_still_cyclic(self):
        document = parse_model(fixture_source('camping-three-valued'), validate=False)
        report = validate_model(document.model)
        self.assertEqual([v.kind for v in report.errors], [ViolationKind.CYCLE])

    def test_out_of_range_carries_witness(self):
        report = validate_model(fire_model(BinOp('+', Var('L'), Var('ML'))))
        violations = report.of_kind(ViolationKind.OUT_OF_RANGE)
        self.assertEqual(len(violations), 1)
        self.assertEqual(violations[0].variable, 'F')
        self.assertEqual(violations[0].witness, (('L', 1), ('ML', 1)))

    def test_missing_and_extra_mechanisms(self):
        model = CausalModel(fire_signature(), (
            Mechanism('L', Var('U_L')), Mechanism('F', Var('L')), Mechanism('U_ML', Const(0)),
        ))
        kinds = {v.kind for v in validate_model(model)}
        self.assertIn(ViolationKind.MISSING_MECHANISM, kinds)
        self.assertIn(ViolationKind.EXTRA_MECHANISM, kinds)

    def test_unknown_and_self_reference(self):
        unknown = validate_model(fire_model(BinOp('max', Var('L'), Var('MM'))))
        self.assertEqual(unknown.errors[0].kind, ViolationKind.UNKNOWN_REFERENCE)
        self.assertEqual(unknown.errors[0].variable, 'F')
        looping = validate_model(fire_model(BinOp('max', Var('L'), Var('F'))))
        self.assertIn(ViolationKind.SELF_REFERENCE, {v.kind for v in looping})

    def test_duplicate_declaration(self):
        signature = Signature.build({'L': (0, 1)}, {'L': (0, 1), 'F': (0, 1)})
        model = CausalModel(signature, (Mechanism('F', Var('L')),))
        self.assertIn(ViolationKind.DUPLICATE_VARIABLE, {v.kind for v in validate_model(model)})

    def test_totality_cap_downgrades_to_warning(self):
        report = validate_model(fire_model(BinOp('max', Var('L'), Var('ML'))), totality_cap=1)
        self.assertTrue(report.is_valid)
        self.assertEqual([v.kind for v in report.warnings],
                         [ViolationKind.TOTALITY_UNVERIFIED] * 3)

    def test_no_endogenous(self):
        model = CausalModel(Signature.build({'U': (0, 1)}, {}), ())
        self.assertIn(ViolationKind.NO_ENDOGENOUS, {v.kind for v in validate_model(model)})


class TestGraph(unittest.TestCase):
    def setUp(self):
        self.model = load_fixture('rock-throw-5var').document.model

    def test_dependency_graph(self):
        self.assertEqual(dependency_graph(self.model),
                         {('ST', 'SH'), ('SH', 'BH'), ('BT', 'BH'), ('SH', 'BS'), ('BH', 'BS')})
        with_exogenous = dependency_graph(self.model, include_exogenous=True)
        self.assertIn(('U_ST', 'ST'), with_exogenous)
        self.assertIn(('U_BT', 'BT'), with_exogenous)

    def test_topological_order_breaks_ties_by_declaration(self):
        self.assertEqual(topological_order(self.model), ['ST', 'BT', 'SH', 'BH', 'BS'])
        text = """
        model reordered {
          exogenous  { U: {0,1} }
          endogenous { BS: {0,1}  B: {0,1}  A: {0,1} }
          equations  { BS = max(A, B)  A = U  B = U }
        }
        """
        self.assertEqual(topological_order(parse_model(text).model), ['B', 'A', 'BS'])

    def test_cycle_raises(self):
        document = parse_model(fixture_source('camping-cyclic'), validate=False)
        with self.assertRaises(InvalidModelError):
            topological_order(document.model)


class TestTransform(unittest.TestCase):
    def setUp(self):
        self.disjunctive = load_fixture('forest-fire-disjunctive').document.model
        self.context = {'U_L': 1, 'U_ML': 0}

    def test_rename_preserves_solutions(self):
        mapping = {'L': 'Lightning', 'U_L': 'U_Lightning'}
        renamed = rename_variables(self.disjunctive, mapping)
        world = solve(renamed, {'U_Lightning': 1, 'U_ML': 0})
        self.assertEqual(world['Lightning'], 1)
        self.assertEqual(world['F'], 1)

    def test_rename_must_be_injective(self):
        with self.assertRaises(InvalidModelError):
            rename_variables(self.disjunctive, {'L': 'ML'})

    def test_recode_preserves_solutions_under_the_code(self):
        codes = {'L': {0: 1, 1: 0}, 'U_ML': {0: 5, 1: 7}}
        recoded = recode_values(self.disjunctive, codes)
        self.assertTrue(validate_model(recoded).is_valid)
        world = solve(recoded, {'U_L': 1, 'U_ML': 5})
        self.assertEqual(world['L'], 0)
        self.assertEqual(world['ML'], 0)
        self.assertEqual(world['F'], 1)

    def test_recode_requires_bijection(self):
        with self.assertRaises(InvalidModelError):
            recode_values(self.disjunctive, {'L': {0: 1, 1: 1}})

    def test_bodyguard_is_the_disjunctive_forest_fire(self):
        bodyguard = load_fixture('bodyguard').document.model
        mapping = find_isomorphism(bodyguard, self.disjunctive)
        self.assertIsNotNone(mapping)
        self.assertEqual(mapping['VS'], 'F')
        self.assertEqual({mapping['A'], mapping['B']}, {'L', 'ML'})

    def test_conjunctive_and_disjunctive_are_not_isomorphic(self):
        conjunctive = load_fixture('forest-fire-conjunctive').document.model
        self.assertIsNone(find_isomorphism(conjunctive, self.disjunctive))
        rock = load_fixture('rock-throw-5var').document.model
        self.assertIsNone(find_isomorphism(rock, self.disjunctive))


if __name__ == '__main__':
    unittest.main()

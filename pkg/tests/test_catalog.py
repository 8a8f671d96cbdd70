import json

import numpy as np
import pytest

from fieldquanta.catalog import (BUILTIN_NAMES, builtin, from_document, load,
                                 save, specs_equal, to_document)
from fieldquanta.errors import ParseError, UnknownName, ValidationError
from fieldquanta.reps import HONESTLY_REAL, SECRETLY_COMPLEX, is_real_irreducible, real_type


class TestBuiltins:
    @pytest.mark.parametrize("name", BUILTIN_NAMES)
    def test_constructs_and_validates(self, name):
        spec = builtin(name)
        spec.validate()
        for f in spec.fields:
            assert is_real_irreducible(f.internal), f.name

    def test_complex_kg_shape(self):
        spec = builtin("complex-kg")
        assert len(spec.fields) == 1
        f = spec.fields[0]
        assert f.kind == "Scalar"
        assert f.internal.dim == 2
        assert f.charges == {"u1": 1.0}

    def test_gauge_su3_shape(self):
        f = builtin("gauge(su3)").fields[0]
        assert f.internal.dim == 8
        assert len(f.internal.generators) == 28  # so(8)

    def test_kg_internal_parametrized(self):
        f = builtin("kg-internal(5)").fields[0]
        assert f.internal.dim == 5
        assert len(f.internal.generators) == 10

    def test_standard_model_field_content(self):
        spec = builtin("standard-model")
        names = [f.name for f in spec.fields]
        assert names == ["left-leptons", "left-quarks", "right-leptons", "right-quarks",
                         "gauge-su2", "gauge-su3", "gauge-u1", "higgs"]
        assert spec.vacuum[0] == "higgs"
        np.testing.assert_allclose(spec.vacuum[1], [1.0, 0.0, 0.0, 0.0])

    def test_standard_model_type_predictions(self):
        # matter fields secretly complex, gauge fields honestly real
        spec = builtin("standard-model")
        for f in spec.fields:
            rt = real_type(f.internal)
            if f.kind == "GaugeVector":
                assert rt.tag == HONESTLY_REAL, f.name
            else:
                assert rt.tag == SECRETLY_COMPLEX, f.name

    def test_unknown_name(self):
        with pytest.raises(UnknownName):
            builtin("kaluza-klein")
        with pytest.raises(UnknownName):
            builtin("kg-internal(1)")

    @pytest.mark.parametrize("name", BUILTIN_NAMES)
    def test_invariant_metric_holds_under_group_flow(self, name):
        from fieldquanta.reps import find_invariant_metric, metric_invariance_residual
        for f in builtin(name).fields:
            metric = find_invariant_metric(f.internal)
            for t in (0.3, 1.0):
                assert metric_invariance_residual(f.internal, metric, t) <= 1e-8

    @pytest.mark.parametrize("name", BUILTIN_NAMES)
    def test_candidates_always_commute_or_anticommute(self, name):
        # genuine symmetries never land between the two cases
        from fieldquanta.discrete import commutation_sign
        for f in builtin(name).fields:
            rt = real_type(f.internal)
            if rt.tag != SECRETLY_COMPLEX:
                continue
            for cand in f.discrete_candidates:
                assert commutation_sign(cand.validate(), rt.J) in (-1, +1)


class TestSpecFiles:
    @pytest.mark.parametrize("name", ["complex-kg", "standard-model", "schroedinger"])
    def test_save_load_round_trip(self, tmp_path, name):
        spec = builtin(name)
        path = tmp_path / "spec.json"
        save(spec, str(path))
        assert specs_equal(load(str(path)), spec)

    def test_unclosed_generators_rejected(self):
        doc = to_document(builtin("complex-kg"))
        doc["fields"][0]["internal"]["generators"].append(
            [[1.0, 0.0], [0.0, -1.0]])
        spec = from_document(doc)
        with pytest.raises(ValidationError) as err:
            spec.validate()
        assert any("commutator outside the span" in v for v in err.value.violations)

    def test_dim_mismatch_is_parse_error(self):
        doc = to_document(builtin("complex-kg"))
        doc["fields"][0]["internal"]["generators"][0] = [[0.0, 1.0, 0.0],
                                                         [-1.0, 0.0, 0.0],
                                                         [0.0, 0.0, 0.0]]
        with pytest.raises(ParseError) as err:
            from_document(doc)
        assert "generators[0]" in str(err.value)

    def test_statistics_mismatch_listed(self):
        doc = to_document(builtin("complex-kg"))
        doc["fields"][0]["statistics"] = "Fermi"
        with pytest.raises(ValidationError) as err:
            from_document(doc).validate()
        assert any("must be Bose" in v for v in err.value.violations)

    def test_all_violations_collected(self):
        doc = to_document(builtin("standard-model"))
        doc["fields"][0]["statistics"] = "Bose"
        doc["fields"][4]["statistics"] = "Fermi"
        with pytest.raises(ValidationError) as err:
            from_document(doc).validate()
        assert len(err.value.violations) == 2

    def test_vacuum_must_name_a_field(self):
        doc = to_document(builtin("higgs-sector"))
        doc["vacuum"]["field"] = "inflaton"
        with pytest.raises(ValidationError):
            from_document(doc).validate()

    def test_bad_schema(self):
        with pytest.raises(ParseError):
            from_document({"schema": "fieldquanta-spec/999", "name": "x", "fields": []})

    def test_parse_error_on_broken_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(ParseError):
            load(str(path))

    def test_full_precision_round_trip(self, tmp_path):
        spec = builtin("standard-model")
        path = tmp_path / "sm.json"
        save(spec, str(path))
        loaded = load(str(path))
        for f0, f1 in zip(spec.fields, loaded.fields):
            for g0, g1 in zip(f0.internal.generators, f1.internal.generators):
                assert np.array_equal(g0, g1)

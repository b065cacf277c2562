import pytest

fastapi_testclient = pytest.importorskip("fastapi.testclient")

from quadstab.api import app  # noqa: E402

client = fastapi_testclient.TestClient(app)


def cv(re=0.0, im=0.0):
    return {"re": re, "im": im}


class TestHealth:
    def test_health(self):
        r = client.get("/health")
        assert r.status_code == 200
        assert r.json() == {"status": "ok", "version": "0.1.0"}


class TestSolveEndpoint:
    def test_real_factorization(self):
        r = client.post("/solve", json={"a": cv(1), "b": cv(-3), "c": cv(2)})
        assert r.status_code == 200
        body = r.json()
        assert body["case"] == "Real2"
        assert body["x1"] == {"re": 1.9999999999999996, "im": 0.0}
        assert body["x2"] == {"re": 1.0000000000000002, "im": 0.0}
        assert body["diagnostics"] is None

    def test_diagnostics_real(self):
        r = client.post(
            "/solve",
            json={"a": cv(1), "b": cv(-3), "c": cv(2), "diagnostics": True},
        )
        diag = r.json()["diagnostics"]
        assert diag["alpha"]["re"] == -1.4142135623730951
        assert diag["beta"] == 1.0606601717798212
        assert diag["e"] == 1.0
        assert diag["f"] is None

    def test_diagnostics_complex(self):
        r = client.post(
            "/solve",
            json={"a": cv(1), "b": cv(0, -3), "c": cv(-2), "diagnostics": True},
        )
        body = r.json()
        assert body["case"] == "Complex"
        diag = body["diagnostics"]
        assert diag["e"] is None and diag["f"] is not None
        assert abs(abs(complex(diag["f"]["re"], diag["f"]["im"])) - 1.0) <= 8 * 2.0**-53

    def test_degenerate_is_422(self):
        r = client.post("/solve", json={"a": cv(0), "b": cv(1), "c": cv(1)})
        assert r.status_code == 422

    def test_range_failure_is_400(self):
        r = client.post("/solve", json={"a": cv(5e-324), "b": cv(1e308), "c": cv(1)})
        assert r.status_code == 400

    def test_non_finite_is_422(self):
        # JSON cannot carry an infinity literal; the string coerces to one.
        r = client.post(
            "/solve", json={"a": cv(1), "b": {"re": "1e999"}, "c": cv(1)}
        )
        assert r.status_code == 422


class TestCheckEndpoint:
    def test_stable_report(self):
        r = client.post("/check", json={"a": cv(1), "b": cv(-3), "c": cv(2)})
        assert r.status_code == 200
        body = r.json()
        assert body["case"] == "Real2"
        assert body["ebs_pass"] and body["ems_pass"] and body["nbs_pass"]
        assert body["nbs_ratio"] == 5.93439168722175e-17
        assert body["ems_fwd_err_1"] == 0.0
        assert body["delta"] == 64.0 * 2.0**-53

    def test_zero_b_is_422(self):
        r = client.post("/check", json={"a": cv(1), "b": cv(0), "c": cv(4)})
        assert r.status_code == 422

    def test_nonpositive_delta_is_422(self):
        r = client.post(
            "/check",
            json={"a": cv(1), "b": cv(-3), "c": cv(2), "delta_ulps": 0},
        )
        assert r.status_code == 422


class TestExperimentEndpoint:
    def test_small_sum_run(self):
        r = client.post(
            "/experiment", json={"set": "SmallSum", "n_trials": 20, "seed": 9}
        )
        assert r.status_code == 200
        body = r.json()
        assert body["passed"] is True
        assert body["summary"]["n_trials"] == 20.0
        assert body["csv"] is None

    def test_csv_included_on_request(self):
        r = client.post(
            "/experiment",
            json={"set": "SmallSum", "n_trials": 5, "seed": 3, "include_csv": True},
        )
        csv = r.json()["csv"]
        assert csv.startswith("# quadstab experiment set=SmallSum n=5 seed=3")
        assert len(csv.splitlines()) == 7

    def test_unknown_set_is_422(self):
        r = client.post("/experiment", json={"set": "Bogus", "n_trials": 5})
        assert r.status_code == 422

    def test_zero_trials_is_422(self):
        r = client.post("/experiment", json={"set": "SmallSum", "n_trials": 0})
        assert r.status_code == 422


class TestCounterexampleEndpoint:
    def test_radius_one(self):
        r = client.post("/counterexample", json={"t": 27, "radius": 1})
        assert r.status_code == 200
        body = r.json()
        assert body["min_sum_err"] == 0.0
        assert (body["argmin_i"], body["argmin_j"]) == (0, 1)
        assert body["min_prod_err_ulps"] <= 4.0

    def test_correctly_rounded_pair(self):
        r = client.post("/counterexample", json={"t": 27, "radius": 0})
        body = r.json()
        assert body["min_sum_err"] == 7.450580541412677e-09
        assert body["min_prod_err_ulps"] == 0.5

    def test_t_below_27_is_422(self):
        r = client.post("/counterexample", json={"t": 26})
        assert r.status_code == 422

    def test_radius_above_cap_is_422(self):
        r = client.post("/counterexample", json={"t": 27, "radius": 1001})
        assert r.status_code == 422

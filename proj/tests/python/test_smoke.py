import pytest

import kodcalc


def test_catalog_anchors():
    horikawa = kodcalc.instantiate("horikawa")
    assert kodcalc.plurigenus(horikawa, 1) == 10
    assert kodcalc.plurigenus(horikawa, 2) == 27
    sextic = kodcalc.instantiate("sextic")
    assert kodcalc.plurigenus(sextic, 2) == 35
    assert kodcalc.plurigenus(kodcalc.instantiate("dolgachev", [2, 3]), 6) == 2


def test_blow_up_and_forms():
    plane8 = kodcalc.blow_up(kodcalc.instantiate("cp2"), 8)
    assert (plane8.c1_sq, plane8.c2) == (1, 11)
    barlow = kodcalc.instantiate("barlow")
    assert kodcalc.h_cobordant(barlow, plane8)
    form = kodcalc.intersection_form(barlow)
    assert (form.rank, form.signature, form.parity) == (9, -7, "odd")


def test_verdict_chain():
    barlow = kodcalc.instantiate("barlow")
    plane8 = kodcalc.blow_up(kodcalc.instantiate("cp2"), 8)
    verdict = kodcalc.diffeomorphic_product(barlow, plane8, 2)
    assert verdict.outcome == "DiffeomorphicViaSCobordism"
    assert verdict.chain == ["Thm2.1", "Cor2.5", "Thm2.3"]
    smale = kodcalc.diffeomorphic_product(barlow, plane8, 0)
    assert smale.outcome == "DiffeomorphicViaSmale"


def test_products_and_kod():
    x = kodcalc.product(kodcalc.instantiate("barlow"), 2)
    assert tuple(x.chern3) == (-6, -24, -22)
    assert x.kod == "3"
    assert x.pi1 == "surface_group(2)"
    assert kodcalc.threefold_plurigenus(
        kodcalc.product(kodcalc.instantiate("sextic"), 2), 2) == 105


def test_expression_evaluation():
    surface = kodcalc.evaluate("blowup(cp2, 8)")
    assert surface.c1_sq == 1
    threefold = kodcalc.evaluate("product(horikawa, curve(1))")
    assert threefold.kod == "2"
    assert kodcalc.canonical("  product( k3 ,curve( 2 ) ) ") == "product(k3, curve(2))"
    with pytest.raises(kodcalc.CalculusError, match="NotCoprime"):
        kodcalc.evaluate("dolgachev(2, 4)")
    with pytest.raises(kodcalc.CalculusError, match="TypeError"):
        kodcalc.evaluate("blowup(product(k3, curve(1)), 2)")


def test_verify_reports():
    report = kodcalc.verify_theorem_a("A3", k_max=3, genus=2)
    assert report["passed"] is True
    assert [row["kod_pair"] for row in report["rows"]] == [["-inf", "3"]] * 4

    b2 = kodcalc.verify_theorem_b("B2", k_max=2, genus=1, m_bound=12)
    assert b2["passed"] is True
    assert b2["rows"][0]["evidence"] == {
        "kind": "PlurigenusDiffersAt", "m": 2, "left": 27, "right": 35}


def test_coverage_and_anomalies():
    pairs = kodcalc.coverage_theorem_a()
    assert len(pairs) == 8
    assert ("-inf", "0") not in pairs and ("0", "3") not in pairs
    flags = kodcalc.anomaly_scan()
    assert [flag["id"] for flag in flags] == ["A2-header", "A3-text", "A5-balancing"]


def test_catalog_dump():
    families = kodcalc.catalog()
    assert len(families) == 10
    by_name = {row["family"]: row for row in families}
    assert by_name["k3"]["spin"] is True
    assert by_name["barlow"]["c1_sq"] == 1


def test_bad_arguments_raise():
    with pytest.raises(kodcalc.CalculusError, match="ArityError"):
        kodcalc.instantiate("dolgachev", [2])
    with pytest.raises(kodcalc.CalculusError, match="UnknownFamily"):
        kodcalc.instantiate("quintic")
    with pytest.raises(kodcalc.CalculusError, match="BadParameter"):
        kodcalc.verify_theorem_b("B3", genus=2)
    with pytest.raises(kodcalc.CalculusError, match="Overflow"):
        kodcalc.plurigenus(kodcalc.instantiate("sextic"), 10**12)


def test_balance_and_primitivity():
    catanese = kodcalc.instantiate("catanese")
    k3 = kodcalc.instantiate("k3")
    left, right = kodcalc.balance_blowups(catanese, k3, 1)
    assert (left.blowups, right.blowups) == (2, 1)
    assert kodcalc.h_cobordant(left, right)
    plane8 = kodcalc.blow_up(kodcalc.instantiate("cp2"), 8)
    assert kodcalc.c1_primitive(plane8.c1_coords)
    assert kodcalc.min_distinguishing_plurigenus(
        kodcalc.product(kodcalc.instantiate("dolgachev", [2, 3]), 1),
        kodcalc.product(kodcalc.instantiate("dolgachev", [2, 5]), 1)) == 4

#include <catch2/catch_amalgamated.hpp>

#include "qflag/serialize.hpp"

using namespace qflag;

TEST_CASE("numbers serialize as exact strings") {
    CHECK(int_str(Int("123456789012345678901234567890")) == "123456789012345678901234567890");
    CHECK(rat_str(Rat(-22, 8)) == "-11/4");
    CHECK(rat_str(Rat(5)) == "5");
    CHECK(int_vec_json({Int(1), Int(-2)}) == Json::array({"1", "-2"}));
}

TEST_CASE("q-scalars serialize as exponent and coefficient pairs") {
    const QScalar s = QScalar::q_power(Rat(-2), Rat(-1)) + QScalar::q_power(Rat(1), Rat(3, 2));
    CHECK(qscalar_json(s) == Json::array({Json::array({"-2", "-1"}), Json::array({"1", "3/2"})}));
    CHECK(qscalar_json(QScalar::zero()) == Json::array());
}

TEST_CASE("hilbert series round-trip through JSON text") {
    const RootDatum a3 = build_root_datum('A', 3);
    const HilbertSeries h = flag_hilbert_series(a3, 2);
    const Json j = series_json(h);
    CHECK(j["numerator"] == Json::array({"1", "1"}));
    CHECK(j["denominator_exponents"] == Json::array({1, 1, 1, 1, 1}));
    const Json reparsed = Json::parse(j.dump());
    CHECK(reparsed == j);
    CHECK(reparsed.dump() == j.dump());
}

TEST_CASE("poset serialization carries elements and covers") {
    const RootDatum a2 = build_root_datum('A', 2);
    const Json j = poset_json(build_minuscule_poset(a2, 1));
    CHECK(j["type"] == "A2");
    CHECK(j["size"] == 3);
    CHECK(j["elements"].size() == 3);
    CHECK(j["elements"][0]["length"] == "0");
    CHECK(j["elements"][0]["word"] == Json::array());
    CHECK(j["covers"].size() == 2);
    CHECK(j["covers"][0]["from"] == 0);
    CHECK(Json::parse(j.dump()) == j);
}

TEST_CASE("wonderful reports serialize with and without witnesses") {
    const RootDatum a3 = build_root_datum('A', 3);
    const Json good = wonderful_json(check_wonderful(order_poset(build_minuscule_poset(a3, 2))));
    CHECK(good["wonderful"] == true);
    CHECK(good["witness"].is_null());

    const Json bad = wonderful_json(check_wonderful(bruhat_poset(build_weyl_group(a3))));
    CHECK(bad["wonderful"] == false);
    CHECK(bad["witness"]["bounds_sentinel"] == false);
    CHECK(bad["witness"]["z"].get<int>() >= 0);
}

TEST_CASE("straightening reports serialize deterministically") {
    QGrassmannian g(2, 4);
    const auto rep = g.verify_asl_axioms(std::nullopt, 2);
    const Json j1 = asl_json(rep, true);
    const Json j2 = asl_json(g.verify_asl_axioms(std::nullopt, 2), true);
    CHECK(j1.dump() == j2.dump());
    CHECK(j1["pass"] == true);
    CHECK(j1["standard_counts"] == Json::array({"1", "6", "20"}));
    CHECK(j1["straightening_tables"].size() == 30);

    const Json c = commutation_json(g.minimum_commutation_report());
    CHECK(c["holds"] == true);
    CHECK(c["orientation"] == 1);
    CHECK(c["exponents"][0]["exponent"] == "0");
}

TEST_CASE("criterion results serialize with the envelope schema") {
    const Json env = report_envelope("hilbert");
    CHECK(env["schema"] == 1);
    CHECK(env.begin().key() == "schema");

    CriterionResult r;
    r.number = 6;
    r.title = "series-coincidences";
    r.add("demo", true, "detail text");
    const Json j = criterion_json(r);
    CHECK(j["criterion"] == 6);
    CHECK(j["pass"] == true);
    CHECK(j["checks"][0]["detail"] == "detail text");
    CHECK(Json::parse(j.dump()) == j);
}

#include <catch_amalgamated.hpp>

#include "grasscohom/criteria.hpp"
#include "support.hpp"

using namespace grc;
using namespace grc::test;

namespace {

std::string wedge(int j) { return "wedge^" + std::to_string(j) + "(S)"; }
std::string sym(int j) { return "sym^" + std::to_string(j) + "(Q)"; }

void check_witnesses(const CriterionReport& rep, const IrredSum& s)
{
    for (const auto& c : rep.conditions)
        for (const auto& w : c.witnesses) {
            REQUIRE(w.sym_power >= 0);
            const IrredSum f = twist(tensor(s, IrredSum(sym_q(w.sym_power, s.n()))), w.twist);
            CHECK(h(f, w.degree) == w.dim);
        }
}

} // namespace

TEST_CASE("splitting criterion", "[criteria]")
{
    for (int n = 3; n <= 5; ++n)
        for (int a = -2; a <= 2; ++a)
            for (int b = a; b <= 2; ++b)
                CHECK(check_evans_griffith(line(n, a) + line(n, b)).verdict);

    const CriterionReport q = check_evans_griffith(bundle("Q", 3));
    CHECK_FALSE(q.verdict);
    REQUIRE(q.find("ii"));
    CHECK_FALSE(q.find("ii")->satisfied);
    bool witness = false;
    for (const auto& w : q.find("ii")->witnesses)
        witness = witness || (w.degree == 2 && w.twist == -3 && w.sym_power == 1);
    CHECK(witness);
    check_witnesses(q, bundle("Q", 3));

    CHECK_THROWS(check_evans_griffith(bundle("Q", 3), 0));
    CHECK_THROWS(check_evans_griffith(IrredSum(3)));
}

TEST_CASE("splitting criterion condition list on the quadric", "[criteria]")
{
    for (int r = 2; r <= 8; ++r) {
        std::vector<CriterionGroup> groups;
        for (const auto& c : evans_griffith_conditions(3, r))
            for (const auto& g : c.groups)
                groups.push_back(g);
        std::vector<CriterionGroup> want{{1, 1, 0, true}, {2, 1, 0, true}};
        if (r >= 4)
            want.push_back({3, 0, 0, true});
        CHECK(groups == want);
    }
}

TEST_CASE("wedge summand criterion", "[criteria]")
{
    for (int n = 3; n <= 5; ++n)
        for (int j = 1; j <= n - 2; ++j) {
            const IrredSum w = bundle(wedge(j), n);
            const CriterionReport rep = check_wedge_summand(w, j);
            CHECK(rep.verdict);
            CHECK(rep.conditions.size() <= 5);
            CHECK_FALSE(check_wedge_summand(line(n, 0), j).find("i")->satisfied);
        }
    CHECK(check_wedge_summand(bundle("S + O(1)", 3), 1).verdict);
    CHECK_THROWS(check_wedge_summand(bundle("S", 3), 2));
    CHECK_THROWS(check_wedge_summand(bundle("S", 3), 0));
}

TEST_CASE("sym summand criterion", "[criteria]")
{
    for (int n = 3; n <= 5; ++n)
        for (int j = 1; j <= n - 2; ++j) {
            CHECK(check_sym_summand(bundle(sym(j), n), j).verdict);
            CHECK_FALSE(check_sym_summand(line(n, 0), j).find("i")->satisfied);
        }
    // (i) for Q on the quadric: H^2(Q (x) Q(-3)) = 1.
    const CriterionReport q = check_sym_summand(bundle("Q", 3), 1);
    CHECK(q.find("i")->satisfied);
    CHECK(h(twist(bundle("Q*Q", 3), -3), 2) == 1);
    CHECK_THROWS(check_sym_summand(bundle("Q", 3), 2));
}

TEST_CASE("direct sum criterion", "[criteria]")
{
    CHECK(check_mt(bundle("O(2) + Q(-1) + wedge^2(S)", 4)).verdict);
    const CriterionReport s2 = check_mt(bundle("sym^2(Q)", 3));
    CHECK_FALSE(s2.verdict);
    const ConditionResult* d = s2.find("d, as interpreted");
    REQUIRE(d);
    CHECK_FALSE(d->satisfied);
    bool witness = false;
    for (const auto& w : d->witnesses)
        witness = witness || (w.degree == 2 && w.twist == -3);
    CHECK(witness);

    for (int n = 3; n <= 5; ++n) {
        CHECK_FALSE(check_mt(bundle(sym(n - 1), n)).verdict);
        CHECK_FALSE(check_mt(bundle(sym(n), n)).verdict);
    }
}

TEST_CASE("direct sum criterion reduces to no intermediate cohomology on the quadric", "[criteria]")
{
    std::set<int> degrees;
    for (const auto& c : mt_conditions(3))
        for (const auto& g : c.groups) {
            CHECK(g.sym_power == 0);
            CHECK(g.all_twists);
            degrees.insert(g.degree);
        }
    CHECK(degrees == std::set<int>{1, 2, 3});

    std::set<std::pair<int, int>> groups;
    for (const auto& c : mt_conditions(4))
        for (const auto& g : c.groups)
            groups.insert({g.degree, g.sym_power});
    const std::set<std::pair<int, int>> want{{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {2, 1}, {3, 1}, {4, 1}};
    CHECK(groups == want);
}

TEST_CASE("criteria pass on their own classes", "[criteria][property]")
{
    for (int n = 3; n <= 5; ++n) {
        std::vector<std::string> atoms{"O", "Q"};
        for (int j = 1; j <= n - 2; ++j)
            atoms.push_back(wedge(j));
        for (int trial = 0; trial < 25; ++trial) {
            IrredSum s(n);
            const int count = uniform(1, 4);
            for (int i = 0; i < count; ++i)
                s += twist(bundle(atoms[static_cast<std::size_t>(uniform(0, static_cast<int>(atoms.size()) - 1))], n),
                           uniform(-3, 3));
            INFO(s.str());
            CHECK(check_mt(s).verdict);
            IrredSum split(n);
            for (int i = 0; i < count; ++i)
                split += line(n, uniform(-3, 3));
            CHECK(check_evans_griffith(split).verdict);
        }
    }
}

TEST_CASE("direct sum criterion is monotone under sums", "[criteria][property]")
{
    const int n = 4;
    const std::vector<std::string> pool{"O", "Q(1)", "S", "wedge^2(S)(-1)", "sym^3(Q)", "Q*Q", "S*Q"};
    for (const auto& a : pool)
        for (const auto& b : pool) {
            const IrredSum sa = bundle(a, n);
            const IrredSum sb = bundle(b, n);
            const bool both = check_mt(sa).verdict && check_mt(sb).verdict;
            CHECK(check_mt(sa + sb).verdict == both);
        }
}

TEST_CASE("condition lists move with twists", "[criteria][property]")
{
    for (int n = 3; n <= 5; ++n)
        for (int j = 1; j <= n - 2; ++j)
            for (int t = -3; t <= 3; ++t) {
                const std::vector<IrredSum> samples{bundle(wedge(j), n), bundle("Q + O(1)", n), bundle(sym(j), n)};
                for (const auto& e : samples) {
                    const CriterionReport plain = check_wedge_summand(e, j);
                    const CriterionReport moved =
                        evaluate_conditions(plain.theorem, wedge_summand_conditions(n, j), twist(e, t), -t);
                    REQUIRE(plain.conditions.size() == moved.conditions.size());
                    CHECK(plain.verdict == moved.verdict);
                    for (std::size_t i = 0; i < plain.conditions.size(); ++i)
                        CHECK(plain.conditions[i].satisfied == moved.conditions[i].satisfied);
                }
            }
}

TEST_CASE("criterion witnesses are re-checkable", "[criteria][property]")
{
    for (int trial = 0; trial < 30; ++trial) {
        const int n = uniform(3, 5);
        const IrredSum s = random_sum(n, 2, -3, 3);
        check_witnesses(check_mt(s), s);
        check_witnesses(check_wedge_summand(s, 1), s);
        check_witnesses(check_sym_summand(s, 1), s);
    }
}

TEST_CASE("Qregular checker wraps the quadric test", "[criteria]")
{
    CHECK(check_q_regular(bundle("Q", 3)).verdict);
    CHECK_FALSE(check_q_regular(line(3, -1)).verdict);
    CHECK_THROWS(check_q_regular(line(4, 0)));
}

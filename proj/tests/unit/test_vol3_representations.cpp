#include <gtest/gtest.h>

#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "generators.hpp"

using namespace syslat;

namespace {

template <class F>
void expect_error(ErrorCode code, F&& f) {
    try {
        f();
        ADD_FAILURE() << "expected " << to_string(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

using GaussKey = std::vector<std::pair<long, long>>;

GaussKey gauss_key(const Matrix<GaussianInt>& m) {
    GaussKey k;
    for (const auto& z : m.entries()) k.emplace_back(z.re().get_si(), z.im().get_si());
    return k;
}

// Plain closure of a set of matrices under multiplication, kept separate from enumerate_image.
std::size_t closure_order(const std::vector<Matrix<GaussianInt>>& gens) {
    std::set<GaussKey> seen;
    std::vector<Matrix<GaussianInt>> queue{Matrix<GaussianInt>::identity(gens.front().rows(), GaussianInt(1))};
    seen.insert(gauss_key(queue.front()));
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (const auto& g : gens) {
            auto next = g * queue[i];
            if (seen.insert(gauss_key(next)).second) queue.push_back(std::move(next));
        }
    return seen.size();
}

} // namespace

TEST(Appendix, DataFileMatchesEmbeddedText) {
    const std::string text = read_file(std::string(SYSLAT_DATA_DIR) + "/appendix_v1.txt");
    ASSERT_FALSE(text.empty());
    EXPECT_EQ(text, std::string(kAppendixV1));
    const auto table = parse_appendix(text);
    EXPECT_EQ(table.size(), 5U);
    EXPECT_EQ(table.at("omega_u").rows(), 8U);
    EXPECT_EQ(table.at("rho_c").rows(), 4U);
}

TEST(Appendix, TamperingIsDetected) {
    std::string text(kAppendixV1);
    const auto pos = text.find("-(1 + 2*t^2)");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 12, "-(1 + 3*t^2)");
    expect_error(ErrorCode::ChecksumMismatch, [&] { parse_appendix(text); });
    expect_error(ErrorCode::ParseError, [] { parse_appendix("format syslat-appendix 1\n"); });
}

TEST(Appendix, MalformedBodiesAreRejected) {
    auto with_checksum = [](std::string body) { return body + "checksum fnv1a64 " + hex64(fnv1a64(body)) + "\n"; };
    expect_error(ErrorCode::ParseError,
                 [&] { parse_appendix(with_checksum("format syslat-appendix 1\nmatrix m 2 2\n1, 0\n0\nend\n")); });
    expect_error(ErrorCode::ParseError, [&] { parse_appendix(with_checksum("format syslat-appendix 2\n")); });
    const auto ok = parse_appendix(with_checksum("format syslat-appendix 1\nmatrix m 1 2\nt, s\nend\n"));
    EXPECT_EQ(ok.at("m")(0, 1), tower::s());
}

TEST(Words, FreeReductionAndInverse) {
    EXPECT_EQ(GroupWord("aAb").str(), "b");
    EXPECT_TRUE(GroupWord("abBA").empty());
    const GroupWord w("aabbABAbb");
    EXPECT_TRUE((w * w.inverse()).empty());
    EXPECT_EQ(w.inverse().inverse(), w);
}

TEST(Presentation, RelatorsHoldForBothRepresentations) {
    for (const auto* rep : {&rho_generators(), &omega_generators()}) {
        const auto checks = verify_presentation(*rep);
        EXPECT_EQ(checks.size(), 4U);
        for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.relation;
    }
}

TEST(Presentation, GeneratorsHaveDeterminantOne) {
    for (const auto* rep : {&rho_generators(), &omega_generators()})
        for (const auto& [g, m] : rep->images) EXPECT_EQ(det(m), TowerElem(1)) << g;
}

TEST(Presentation, RelatorsHoldAtRationalPoints) {
    // The same identities after specializing entries at t = 2 and t = 5/3.
    for (const BigRational t0 : {BigRational(2), make_rational(5, 3)}) {
        const auto rho = map_rep(rho_generators(), [&](const TowerElem& x) { return specialize_biquadratic(x, t0); },
                                 "biquadratic");
        for (const auto& c : verify_presentation(rho)) EXPECT_TRUE(c.pass) << c.relation << " at " << t0;
    }
}

TEST(Forms, MFormIsPreservedByRho) {
    const auto form = m_form();
    EXPECT_TRUE(form.is_sesquisymmetric());
    for (const auto& [g, m] : rho_generators().images) EXPECT_TRUE(form.preserved_by(m)) << g;
}

TEST(Forms, RhoHasOneInvariantFormProportionalToM) {
    const auto& rho = rho_generators();
    const auto space = solve_invariant_forms(std::vector{rho.images.at('u'), rho.images.at('c')}, Involution::Galois);
    ASSERT_EQ(space.dimension(), 1U);
    EXPECT_TRUE(proportionality(m_form().matrix, space.hermitian.front().matrix).has_value());
}

TEST(Forms, SignatureAtTOneIsThreeOne) {
    const Specialization at_one(1, 3, QuadElem(0), QuadElem(0, 1, 3));
    EXPECT_EQ(signature_of_diagonal(specialize_matrix(m_form().matrix, at_one)), (Signature{3, 1}));
}

TEST(Forms, OmegaInvariantFormsAndCanonicalJ) {
    const auto& jf = canonical_form();
    EXPECT_EQ(jf.dimension, 4U);
    EXPECT_EQ(jf.free_positions.size(), 4U);
    EXPECT_TRUE(jf.form.is_sesquisymmetric());
    for (const auto& [g, m] : omega_generators().images) EXPECT_TRUE(jf.form.preserved_by(m)) << g;
    EXPECT_EQ(jf.determinant_sqrt * jf.determinant_sqrt, jf.determinant);
    EXPECT_TRUE(jf.ratio_to_reference_is_square);
}

TEST(Forms, DeterminantAgreesAtRationalPoints) {
    // det J computed over Q(s, w) at specific t must equal the evaluated rational function.
    const auto& jf = canonical_form();
    for (const BigRational t0 : {BigRational(2), BigRational(3), make_rational(7, 2)}) {
        const auto j = jf.form.matrix.map([&](const TowerElem& x) { return specialize_biquadratic(x, t0); });
        const BiquadElem d = det(j);
        EXPECT_TRUE(d.in_base());
        EXPECT_EQ(d.c00(), jf.determinant.eval(t0));
        // The ratio to the reference value is a rational square at each point too.
        EXPECT_TRUE(is_rational_square(jf.determinant.eval(t0) / jf.reference_determinant.eval(t0)).has_value());
    }
}

TEST(Conjugacy, OmegaIsConjugateToRhoPlusRho) {
    const auto c = verify_double_conjugacy(42);
    EXPECT_TRUE(c.traces_match);
    EXPECT_FALSE(c.determinant.is_zero());
    const auto& om = omega_generators();
    const auto rr = rho_double();
    for (char g : {'u', 'c'}) EXPECT_EQ(c.conjugator * om.images.at(g), rr.images.at(g) * c.conjugator);
}

TEST(SpanningWords, SearchFindsSixteenIndependentWords) {
    const auto sw = search_spanning_words();
    ASSERT_EQ(sw.words.size(), 16U);
    EXPECT_FALSE(is_zero(sw.certificate));
    std::vector<std::string> names;
    for (const auto& w : sw.words) names.push_back(w.empty() ? "1" : w.str());
    const std::vector<std::string> expected{"1",   "u",   "U",    "c",    "uc",   "Uc",   "cu",   "cU",
                                            "ucu", "ucU", "cuc",  "cUc",  "ucuc", "ucUc", "cucU", "cucUc"};
    EXPECT_EQ(names, expected);
    EXPECT_EQ(sw.certificate, BiquadElem(BigRational(354294000)));
}

TEST(SpanningWords, MaxLengthTooShortExhausts) {
    expect_error(ErrorCode::SearchExhausted, [] { search_spanning_words(2); });
}

TEST(LeftRegular, EtaIsAnIntegralHomomorphism) {
    const auto sw = search_spanning_words();
    const auto lr = build_left_regular(sw.words);
    EXPECT_EQ(lr.eta.dim, 16U);
    for (const auto& c : lr.relations) EXPECT_TRUE(c.pass) << c.relation;
    EXPECT_TRUE(lr.integral);
    // Left multiplication by A on 4 x 4 matrices has trace 4 tr A.
    EXPECT_EQ(lr.trace_u, TowerElem(4) * rho_generators().images.at('u').trace());
    EXPECT_EQ(lr.trace_c, TowerElem(4) * rho_generators().images.at('c').trace());
}

TEST(LeftRegular, DegenerateBasisIsRejected) {
    std::vector<GroupWord> words(16, GroupWord());
    expect_error(ErrorCode::BasisDegenerate, [&] { build_left_regular(words); });
    expect_error(ErrorCode::BasisDegenerate, [] { build_left_regular({GroupWord("u")}); });
}

TEST(FiniteImage, OrderMatchesIndependentClosure) {
    const auto z = omega_at_zero();
    const auto ab = derive_ab(z);
    const auto img = enumerate_image(ab, "ab");
    EXPECT_EQ(img.order(), 320U);
    EXPECT_EQ(closure_order({ab.images.at('a'), ab.images.at('b')}), 320U);
    const auto orb = enumerate_image(z, "uc");
    EXPECT_EQ(orb.order(), closure_order({z.images.at('u'), z.images.at('c')}));
    EXPECT_EQ(orb.order() % 320, 0U);
    expect_error(ErrorCode::CapExceeded, [&] { enumerate_image(ab, "ab", 100); });
}

TEST(FiniteImage, SchreierGeneratorsLieInTheKernel) {
    const auto ab = derive_ab(omega_at_zero());
    const auto img = enumerate_image(ab, "ab");
    const auto words = schreier_kernel_generators(img);
    EXPECT_FALSE(words.empty());
    EXPECT_LE(words.size(), 4 * img.order());
    for (const auto& w : words) EXPECT_TRUE(evaluate_word(w, ab).is_identity()) << w;
    for (std::size_t i = 0; i < img.order(); ++i)
        EXPECT_EQ(evaluate_word(img.transversal[i], ab), img.elements[i]);
}

TEST(FiniteImageExport, JsonCarriesOrderGeneratorsAndTransversal) {
    const auto img = enumerate_image(derive_ab(omega_at_zero()), "ab");
    const auto j = to_json(img);
    EXPECT_EQ(j.at("order"), 320U);
    EXPECT_EQ(j.at("generators"), nlohmann::json({"a", "b", "A", "B"}));
    ASSERT_EQ(j.at("transversal").size(), 320U);
    EXPECT_EQ(j.at("transversal").front(), "1");
    for (std::size_t i = 1; i < 320; ++i) {
        const std::string w = j.at("transversal").at(i);
        EXPECT_EQ(evaluate_word(GroupWord(w), derive_ab(omega_at_zero())), img.elements[i]) << w;
    }
}

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "krg/error.hpp"
#include "krg/krgring.hpp"
#include "krg/parser.hpp"

using json = nlohmann::ordered_json;
using namespace krg;

namespace {

struct Options {
    std::string group;
    std::string involution;
    std::string format = "text";
    unsigned seed = 1;
    int samples = 200;
    int bound = 1;
    std::string a, b;
};

bool as_json(const Options& o) { return o.format == "json"; }

std::shared_ptr<const KRAlgebra> algebra_for(const GroupSpec& spec)
{
    if (spec.family == Family::Torus) return KRAlgebra::torus(spec.rank);
    return KRAlgebra::equivariant(spec);
}

std::string join(const std::vector<int>& xs)
{
    std::string s;
    for (int x : xs) s += (s.empty() ? "" : ", ") + std::to_string(x);
    return s;
}

std::string degree_text(const DegreeDescription& d)
{
    std::string s = d.group + " = " + d.formula;
    if (d.infinite) s += "  (infinite rank)";
    else if (d.free_rank || d.z2_rank)
        s += "  (Z^" + std::to_string(d.free_rank) + " + (Z/2)^" + std::to_string(d.z2_rank) + ")";
    return s;
}

json degree_json(const DegreeDescription& d)
{
    json j = {{"q", d.q}, {"group", d.group}, {"formula", d.formula}};
    if (d.infinite) j["infinite"] = true;
    else {
        j["free_rank"] = d.free_rank;
        j["z2_rank"] = d.z2_rank;
    }
    return j;
}

int cmd_present(const Options& o)
{
    auto spec = parse_group(o.group, o.involution);
    RingPresentation p = present_ring(spec);
    if (as_json(o)) {
        json j;
        j["group"] = p.group;
        j["involution"] = p.involution;
        j["generators"] = json::array();
        for (const auto& g : p.generators) j["generators"].push_back({{"name", g.name}, {"degree", g.degree}, {"source", g.source}});
        j["relations"] = p.relations;
        json cr;
        cr["fundamental_types"] = p.fundamental_types;
        cr["degrees"] = json::array();
        for (const auto& d : p.coefficient_degrees) cr["degrees"].push_back(degree_json(d));
        cr["has_rclasses"] = p.has_rclasses;
        j["coefficient_ring"] = cr;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "group: " << p.group << "\n";
    std::cout << "involution: " << p.involution << "\n";
    std::cout << "fundamental types:\n";
    for (const auto& t : p.fundamental_types) std::cout << "  " << t << "\n";
    std::cout << "generators:\n";
    for (const auto& g : p.generators)
        std::cout << "  " << g.name << "  degree " << g.degree << "  from " << g.source << "\n";
    std::cout << "relations:\n";
    for (const auto& r : p.relations) std::cout << "  " << r << "\n";
    std::cout << "coefficient ring:\n";
    for (const auto& d : p.coefficient_degrees) std::cout << "  KR^-" << d.q << ": " << degree_text(d) << "\n";
    return 0;
}

int cmd_mul(const Options& o)
{
    auto spec = parse_group(o.group, o.involution);
    auto alg = algebra_for(spec);
    KRGElement x = parse_element(alg, o.a), y = parse_element(alg, o.b);
    KRGElement xy = alg->mul(x, y);
    std::string text = alg->render(xy);
    auto degrees = xy.degrees();
    if (as_json(o)) {
        json j = {{"group", spec.token()}, {"involution", involution_name(spec.involution)},
                  {"a", alg->render(x)}, {"b", alg->render(y)}, {"product", text}, {"degrees", degrees}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << text << "\n";
    if (!degrees.empty()) std::cout << "degree: " << join(degrees) << "\n";
    return 0;
}

int cmd_verify(const Options& o)
{
    auto spec = parse_group(o.group, o.involution);
    VerifyOptions vo;
    vo.seed = o.seed;
    vo.samples = o.samples;
    auto results = verify_suite(spec, vo);
    int failed = 0;
    for (const auto& r : results) failed += !r.pass;
    if (as_json(o)) {
        json j = {{"group", spec.token()}, {"involution", involution_name(spec.involution)}, {"checks", json::array()}};
        for (const auto& r : results) {
            json c = {{"name", r.name}, {"pass", r.pass}};
            if (!r.pass) c["detail"] = r.detail;
            j["checks"].push_back(c);
        }
        j["failed"] = failed;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : results)
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << (r.pass ? "" : ": " + r.detail) << "\n";
        std::cout << results.size() << " checks, " << failed << " failed\n";
    }
    return failed ? 1 : 0;
}

CharTable load_table(const std::string& name)
{
    if (is_builtin_name(name)) return builtin_table(name);
    if (!std::filesystem::exists(name)) throw Error(ErrorCode::ParseError, "no built-in group or table file '" + name + "'");
    std::ifstream in(name);
    std::stringstream ss;
    ss << in.rdbuf();
    CharTable t = parse_table(ss.str());
    if (t.name.empty()) t.name = std::filesystem::path(name).stem().string();
    return t;
}

json ranks_json(const TypeRanks& r) { return {{"R", r.r}, {"C", r.c}, {"H", r.h}}; }

std::string ranks_tuple(const TypeRanks& r)
{
    return "(" + std::to_string(r.r) + "," + std::to_string(r.c) + "," + std::to_string(r.h) + ")";
}

int cmd_finite(const Options& o)
{
    CharTable t = load_table(o.group);
    NineRanks r = real_quat_tables(t);
    if (as_json(o)) {
        json j = {{"group", t.name}, {"order", t.order}, {"R", ranks_json(r.R)}, {"RR", ranks_json(r.RR)}, {"RH", ranks_json(r.RH)}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "group: " << t.name << " (order " << t.order << ")\n";
    std::cout << format_ranks(r);
    std::cout << "ranks: " << ranks_tuple(r.R) << "/" << ranks_tuple(r.RR) << "/" << ranks_tuple(r.RH) << "\n";
    return 0;
}

int cmd_table(const Options& o)
{
    std::vector<DegreeDescription> ds;
    std::string name;
    bool lie = true;
    try {
        auto spec = parse_group(o.group, o.involution);
        name = spec.key();
        for (int q = 0; q < 8; ++q) ds.push_back(degree_rank(spec, q));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ParseError) throw;
        CharTable t = load_table(o.group);
        name = t.name;
        lie = false;
        TypeRanks r = real_quat_tables(t).R;
        for (int q = 0; q < 8; ++q) ds.push_back(degree_rank(r, q));
    }
    if (as_json(o)) {
        json j = {{"group", name}, {"finite", !lie}, {"degrees", json::array()}};
        for (const auto& d : ds) j["degrees"].push_back(degree_json(d));
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "group: " << name << "\n";
    for (const auto& d : ds) std::cout << "KR^-" << d.q << ": " << degree_text(d) << "\n";
    return 0;
}

int cmd_reptypes(const Options& o)
{
    auto spec = parse_group(o.group, o.involution);
    auto ring = RepRing::make(spec);
    auto irreps = small_irreducibles(*ring, o.bound);
    json rows = json::array();
    for (const auto& w : irreps) {
        std::string poly = ring->poly(w).render();
        long long dim = ring->dim(w);
        std::string type(1, type_char(ring->type(w)));
        std::string conj = ring->poly(ring->conj(w)).render();
        if (as_json(o))
            rows.push_back({{"highest_weight", to_string(w)}, {"class", poly}, {"dim", dim}, {"type", type}, {"conjugate", conj}});
        else
            std::cout << to_string(w) << "  " << poly << "  dim " << dim << "  type " << type << "  conjugate " << conj << "\n";
    }
    if (as_json(o)) {
        json j = {{"group", spec.token()}, {"involution", involution_name(spec.involution)}, {"irreducibles", rows}};
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

int exit_code(ErrorCode c)
{
    switch (c) {
    case ErrorCode::OddRankSymplectic:
    case ErrorCode::UnsupportedFamily:
    case ErrorCode::InvalidInvolution:
    case ErrorCode::UnsupportedGroup:
    case ErrorCode::WrongSpec: return 3;
    case ErrorCode::UnclassifiableTwisted: return 4;
    default: return 2;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Real equivariant K-theory of compact Lie groups"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool group_flags) {
        if (group_flags)
            sub->add_option("--involution", o.involution, "trivial, conj or symp")
                ->check(CLI::IsMember({"trivial", "conj", "symp"}));
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };

    auto* present = app.add_subcommand("present", "ring presentation of a group");
    present->add_option("group", o.group, "group token such as U3, SU3, C2, G2, T2")->required();
    common(present, true);

    auto* mul = app.add_subcommand("mul", "normal form of a product");
    mul->add_option("group", o.group)->required();
    mul->add_option("a", o.a, "first factor")->required();
    mul->add_option("b", o.b, "second factor")->required();
    common(mul, true);

    auto* table = app.add_subcommand("table", "coefficient groups by degree");
    table->add_option("group", o.group, "group token, built-in finite group or table file")->required();
    common(table, true);

    auto* reptypes = app.add_subcommand("reptypes", "types of small irreducible representations");
    reptypes->add_option("group", o.group)->required();
    reptypes->add_option("--bound", o.bound, "largest fundamental coordinate")->check(CLI::Range(0, 4));
    common(reptypes, true);

    auto* verify = app.add_subcommand("verify", "run the consistency checks for a group");
    verify->add_option("group", o.group)->required();
    verify->add_option("--seed", o.seed, "random seed");
    verify->add_option("--samples", o.samples, "random samples per property")->check(CLI::Range(1, 100000));
    common(verify, true);

    auto* finite = app.add_subcommand("finite", "real and quaternionic ranks of a finite group");
    finite->add_option("table", o.group, "built-in name such as Q8xC3 or a table file")->required();
    common(finite, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*present) return cmd_present(o);
        if (*mul) return cmd_mul(o);
        if (*table) return cmd_table(o);
        if (*reptypes) return cmd_reptypes(o);
        if (*verify) return cmd_verify(o);
        if (*finite) return cmd_finite(o);
    } catch (const ParseFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.code());
    }
    return 0;
}

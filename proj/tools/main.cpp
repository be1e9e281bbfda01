#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kaehler/kaehler.hpp"

namespace {

using namespace kaehler;

struct Opts {
    unsigned m = 1;
    unsigned N = 2;
    std::uint64_t seed = 42;
    unsigned trials = 100;
    unsigned block = 0;
    std::string format = "plain";
    std::string input;
    std::string output;
    std::string file_a;
    std::string file_b;
    std::vector<std::string> exprs;
    bool verify_flag = false;
    bool inject_fault = false;
    bool verbose = false;
};

Format parse_format(const std::string& s) {
    if (s == "plain") return Format::Plain;
    if (s == "latex") return Format::Latex;
    if (s == "json") return Format::Json;
    throw ValidationError("unknown format '" + s + "' (expected plain, latex, or json)");
}

Format render_format(Format fmt) { return fmt == Format::Json ? Format::Plain : fmt; }

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("invalid json in '" + path + "': " + e.what());
    }
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw ValidationError("cannot open output file '" + output_path + "'");
    out << text;
}

std::string matrix_string(const Matrix<Rational>& a) {
    std::string s = "[";
    for (unsigned i = 0; i < a.size(); ++i) {
        if (i) s += ", ";
        s += "[";
        for (unsigned j = 0; j < a.size(); ++j) {
            if (j) s += ", ";
            s += a.at(i, j).to_string();
        }
        s += "]";
    }
    return s + "]";
}

std::string describe_map(const TruncatedSeriesMap<Rational>& phi) {
    NameScheme xs = NameScheme::x_only(phi.m());
    std::string s = "(";
    for (unsigned i = 0; i < phi.m(); ++i) {
        if (i) s += ", ";
        s += render(phi.component(i), xs);
    }
    return s + ")";
}

TruncatedSeriesMap<Rational> load_series_input(const Opts& o, bool m_given) {
    if (!o.input.empty()) {
        if (!o.exprs.empty())
            throw ValidationError("give either --input or inline expressions, not both");
        MapValue v = map_from_json(read_json_file(o.input));
        if (!std::holds_alternative<TruncatedSeriesMap<Rational>>(v))
            throw ValidationError("'" + o.input + "' does not hold a series_map record");
        return std::get<TruncatedSeriesMap<Rational>>(v);
    }
    if (o.exprs.empty())
        throw ValidationError("no input map given (pass component expressions or --input FILE)");
    unsigned m = m_given ? o.m : static_cast<unsigned>(o.exprs.size());
    std::vector<std::string> warnings;
    auto phi = parse_series_map(o.exprs, m, o.N, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    return phi;
}

PolyEndo<Rational> load_endo_input(const Opts& o, bool m_given) {
    if (!o.input.empty()) {
        if (!o.exprs.empty())
            throw ValidationError("give either --input or inline expressions, not both");
        MapValue v = map_from_json(read_json_file(o.input));
        if (!std::holds_alternative<PolyEndo<Rational>>(v))
            throw ValidationError("'" + o.input + "' does not hold a poly_endo record");
        return std::get<PolyEndo<Rational>>(v);
    }
    if (o.exprs.empty())
        throw ValidationError("no input map given (pass component expressions or --input FILE)");
    unsigned m = m_given ? o.m : static_cast<unsigned>(o.exprs.size());
    if (o.exprs.size() != m)
        throw ValidationError("expected " + std::to_string(m) + " component expressions");
    NameScheme xs = NameScheme::x_only(m);
    std::vector<Polynomial<Rational>> comps;
    for (const auto& e : o.exprs) comps.push_back(parse_polynomial(e, xs));
    return PolyEndo<Rational>(m, std::move(comps));
}

/// Attaches a verified inverse: triangular back-substitution first, then the
/// whole map as a single block (covers linear maps with lower-order tails).
PolyAutomorphism<Rational> certify_automorphism(const PolyEndo<Rational>& f) {
    try {
        return invert_block_triangular(f, 1);
    } catch (const NotInvertibleError&) {
    }
    try {
        return invert_block_triangular(f, f.n);
    } catch (const NotInvertibleError&) {
    }
    throw NotInvertibleError("could not certify the input as invertible (not block triangular "
                             "for block sizes 1 or " +
                             std::to_string(f.n) + ")");
}

std::string endo_text(const PolyEndo<Rational>& f, const NameScheme& scheme, Format fmt) {
    std::ostringstream out;
    for (unsigned i = 0; i < f.n; ++i)
        out << scheme.slot_name(i, fmt) << " -> " << render(f.components[i], scheme, fmt) << "\n";
    return out.str();
}

std::string series_text(const TruncatedSeriesMap<Rational>& phi, Format fmt) {
    NameScheme xs = NameScheme::x_only(phi.m());
    std::ostringstream out;
    for (unsigned i = 0; i < phi.m(); ++i)
        out << xs.slot_name(i, fmt) << " -> " << render(phi.component(i), xs, fmt) << "\n";
    return out.str();
}

int cmd_diff(const Opts& o) {
    NameScheme xs = NameScheme::x_only(o.m);
    Polynomial<Rational> f = parse_polynomial(o.exprs.at(0), xs);
    DifferentialContext ctx(o.m, o.N);
    NameScheme amb = NameScheme::ambient(o.m, o.N);
    Format fmt = parse_format(o.format);
    std::ostringstream out;

    if (fmt == Format::Json) {
        nlohmann::json j;
        j["kind"] = "differentials";
        j["m"] = o.m;
        j["N"] = o.N;
        j["f"] = poly_to_json(f);
        nlohmann::json arr = nlohmann::json::array();
        for (unsigned n = 1; n <= o.N; ++n) {
            nlohmann::json rec;
            rec["order"] = n;
            rec["poly"] = poly_to_json(higher_differential(f, n, ctx));
            arr.push_back(rec);
        }
        j["differentials"] = arr;
        out << j.dump(2) << "\n";
    } else {
        for (unsigned n = 1; n <= o.N; ++n) {
            Polynomial<Rational> d = higher_differential(f, n, ctx);
            if (fmt == Format::Latex)
                out << "d^{" << n << "}f = " << render(d, amb, fmt) << "\n";
            else
                out << "d" << n << "(f) = " << render(d, amb, fmt) << "\n";
        }
    }
    emit(out.str(), o.output);
    return 0;
}

int cmd_alpha(const Opts& o, bool m_given) {
    TruncatedSeriesMap<Rational> phi = load_series_input(o, m_given);
    if (!is_automorphism(phi))
        throw ValidationError("not an automorphism: linear part " +
                              matrix_string(phi.linear_part()) + " has determinant 0");
    AlphaImage<Rational> img = alpha(phi, o.verify_flag);
    if (o.verify_flag) std::cerr << "dual-route consistency check passed\n";

    Format fmt = parse_format(o.format);
    if (fmt == Format::Json) {
        emit(to_json(img.base.forward()).dump(2) + "\n", o.output);
        return 0;
    }
    NameScheme ys = NameScheme::pure_y(phi.m(), phi.N());
    emit(endo_text(img.base.forward(), ys, fmt), o.output);
    return 0;
}

int cmd_compose(const Opts& o) {
    MapValue a = map_from_json(read_json_file(o.file_a));
    MapValue b = map_from_json(read_json_file(o.file_b));
    Format fmt = parse_format(o.format);

    if (std::holds_alternative<TruncatedSeriesMap<Rational>>(a) &&
        std::holds_alternative<TruncatedSeriesMap<Rational>>(b)) {
        auto c = compose(std::get<TruncatedSeriesMap<Rational>>(a),
                         std::get<TruncatedSeriesMap<Rational>>(b));
        if (fmt == Format::Json)
            emit(to_json(c).dump(2) + "\n", o.output);
        else
            emit(series_text(c, fmt), o.output);
        return 0;
    }
    if (std::holds_alternative<PolyEndo<Rational>>(a) &&
        std::holds_alternative<PolyEndo<Rational>>(b)) {
        auto c = compose_poly(std::get<PolyEndo<Rational>>(a), std::get<PolyEndo<Rational>>(b));
        if (fmt == Format::Json)
            emit(to_json(c).dump(2) + "\n", o.output);
        else
            emit(endo_text(c, NameScheme::x_only(c.n), fmt), o.output);
        return 0;
    }
    throw ValidationError("cannot compose a series_map with a poly_endo");
}

int cmd_invert(const Opts& o) {
    std::string path = !o.input.empty() ? o.input : o.file_a;
    if (path.empty()) throw ValidationError("no input record given");
    MapValue v = map_from_json(read_json_file(path));
    Format fmt = parse_format(o.format);

    if (std::holds_alternative<TruncatedSeriesMap<Rational>>(v)) {
        auto inv = invert(std::get<TruncatedSeriesMap<Rational>>(v));
        if (fmt == Format::Json)
            emit(to_json(inv).dump(2) + "\n", o.output);
        else
            emit(series_text(inv, fmt), o.output);
        return 0;
    }
    const auto& f = std::get<PolyEndo<Rational>>(v);
    PolyAutomorphism<Rational> aut =
        o.block ? invert_block_triangular(f, o.block) : certify_automorphism(f);
    if (fmt == Format::Json)
        emit(to_json(aut.inverse()).dump(2) + "\n", o.output);
    else
        emit(endo_text(aut.inverse(), NameScheme::x_only(f.n), fmt), o.output);
    return 0;
}

int cmd_classify(const Opts& o) {
    std::string path = !o.input.empty() ? o.input : o.file_a;
    if (path.empty()) throw ValidationError("no input record given");
    MapValue v = map_from_json(read_json_file(path));
    Format fmt = parse_format(o.format);
    std::ostringstream out;

    if (std::holds_alternative<TruncatedSeriesMap<Rational>>(v)) {
        const auto& phi = std::get<TruncatedSeriesMap<Rational>>(v);
        bool aut = is_automorphism(phi);
        std::string det = phi.linear_part().determinant().to_string();
        if (fmt == Format::Json) {
            nlohmann::json j;
            j["kind"] = "classification";
            j["map_kind"] = "series_map";
            j["m"] = phi.m();
            j["N"] = phi.N();
            j["automorphism"] = aut;
            j["linear_determinant"] = det;
            out << j.dump(2) << "\n";
        } else {
            out << "kind: truncated series map\n";
            out << "m: " << phi.m() << "\n";
            out << "N: " << phi.N() << "\n";
            out << "automorphism: " << (aut ? "yes" : "no") << "\n";
            out << "linear part determinant: " << det << "\n";
        }
        emit(out.str(), o.output);
        return 0;
    }

    const auto& f = std::get<PolyEndo<Rational>>(v);
    std::vector<unsigned> sizes;
    for (unsigned d = 1; d <= f.n; ++d)
        if (f.n % d == 0 && is_block_triangular(f, d)) sizes.push_back(d);
    Polynomial<Rational> det = jacobian_determinant(f);
    std::string det_str = render(det, NameScheme::x_only(f.n));
    bool const_det = det.is_constant() && !det.is_zero();

    if (fmt == Format::Json) {
        nlohmann::json j;
        j["kind"] = "classification";
        j["map_kind"] = "poly_endo";
        j["n"] = f.n;
        j["linear"] = is_linear(f);
        j["triangular"] = is_triangular(f);
        j["elementary"] = is_elementary(f);
        j["block_triangular_sizes"] = sizes;
        j["jacobian_determinant"] = det_str;
        j["jacobian_determinant_is_nonzero_constant"] = const_det;
        out << j.dump(2) << "\n";
    } else {
        out << "kind: polynomial endomorphism\n";
        out << "variables: " << f.n << "\n";
        out << "linear: " << (is_linear(f) ? "yes" : "no") << "\n";
        out << "triangular: " << (is_triangular(f) ? "yes" : "no") << "\n";
        out << "elementary: " << (is_elementary(f) ? "yes" : "no") << "\n";
        out << "block-triangular block sizes:";
        for (unsigned d : sizes) out << " " << d;
        out << "\n";
        out << "jacobian determinant: " << det_str << "\n";
        out << "jacobian determinant is a nonzero constant: " << (const_det ? "yes" : "no") << "\n";
    }
    emit(out.str(), o.output);
    return 0;
}

int cmd_embed(const Opts& o, bool m_given) {
    PolyEndo<Rational> f = load_endo_input(o, m_given);
    PolyAutomorphism<Rational> aut = certify_automorphism(f);
    PolyAutomorphism<Rational> big = embed_ga(aut, o.N);
    Format fmt = parse_format(o.format);
    if (fmt == Format::Json) {
        emit(to_json(big.forward()).dump(2) + "\n", o.output);
        return 0;
    }
    NameScheme amb = NameScheme::ambient(f.n, o.N);
    emit(endo_text(big.forward(), amb, fmt), o.output);
    return 0;
}

// ---------------------------------------------------------------------------
// examples

struct ExampleLine {
    std::string target;
    std::string computed;
    std::string expected;
    bool ok;
};

struct ExampleBlock {
    std::string name;
    unsigned m, N;
    std::vector<std::string> phi;
    std::vector<ExampleLine> lines;
    bool ok;
};

ExampleBlock run_example(const std::string& name, const TruncatedSeriesMap<Symbolic>& phi,
                         const std::vector<std::string>& expected) {
    ExampleBlock block;
    block.name = name;
    block.m = phi.m();
    block.N = phi.N();
    NameScheme xs = NameScheme::x_only(phi.m());
    for (unsigned i = 0; i < phi.m(); ++i) block.phi.push_back(render(phi.component(i), xs));

    AlphaImage<Symbolic> img = alpha(phi, true);
    NameScheme ys = NameScheme::pure_y(phi.m(), phi.N());
    block.ok = true;
    for (unsigned slot = 0; slot < phi.m() * phi.N(); ++slot) {
        ExampleLine line;
        line.target = ys.slot_name(slot);
        line.computed = render(img.base.forward().components[slot], ys);
        line.expected = expected.at(slot);
        line.ok = line.computed == line.expected;
        block.ok = block.ok && line.ok;
        block.lines.push_back(std::move(line));
    }
    return block;
}

ExampleBlock cubic_example() {
    Polynomial<Symbolic> comp(1);
    comp.add_term({1}, Symbolic::var("a1"));
    comp.add_term({2}, Symbolic::var("a2"));
    comp.add_term({3}, Symbolic::var("a3"));
    TruncatedSeriesMap<Symbolic> phi(1, 3, {comp});
    return run_example("cubic example", phi,
                       {
                           "a1*y1_1",
                           "a2*y1_1^2 + a1*y1_2",
                           "a3*y1_1^3 + 2*a2*y1_1*y1_2 + a1*y1_3",
                       });
}

ExampleBlock quadratic_example() {
    auto lab = [](unsigned r, unsigned i, unsigned j) {
        return Symbolic::var("a" + std::to_string(r) + "_" + std::to_string(i) + std::to_string(j));
    };
    std::vector<Polynomial<Symbolic>> comps;
    for (unsigned r = 1; r <= 2; ++r) {
        Polynomial<Symbolic> c(2);
        c.add_term({1, 0}, lab(r, 1, 0));
        c.add_term({0, 1}, lab(r, 0, 1));
        c.add_term({2, 0}, lab(r, 2, 0));
        c.add_term({1, 1}, lab(r, 1, 1));
        c.add_term({0, 2}, lab(r, 0, 2));
        comps.push_back(std::move(c));
    }
    TruncatedSeriesMap<Symbolic> phi(2, 2, std::move(comps));
    return run_example(
        "quadratic example", phi,
        {
            "a1_10*y1_1 + a1_01*y2_1",
            "a2_10*y1_1 + a2_01*y2_1",
            "a1_20*y1_1^2 + a1_11*y1_1*y2_1 + a1_02*y2_1^2 + a1_10*y1_2 + a1_01*y2_2",
            "a2_20*y1_1^2 + a2_11*y1_1*y2_1 + a2_02*y2_1^2 + a2_10*y1_2 + a2_01*y2_2",
        });
}

int cmd_examples(const Opts& o) {
    std::vector<ExampleBlock> blocks = {cubic_example(), quadratic_example()};
    bool all_ok = true;
    for (const auto& b : blocks) all_ok = all_ok && b.ok;

    Format fmt = parse_format(o.format);
    std::ostringstream out;
    if (fmt == Format::Json) {
        nlohmann::json j;
        j["kind"] = "worked-examples";
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& b : blocks) {
            nlohmann::json rec;
            rec["name"] = b.name;
            rec["m"] = b.m;
            rec["N"] = b.N;
            rec["components"] = b.phi;
            nlohmann::json lines = nlohmann::json::array();
            for (const auto& line : b.lines) {
                nlohmann::json lr;
                lr["target"] = line.target;
                lr["computed"] = line.computed;
                lr["expected"] = line.expected;
                lr["match"] = line.ok;
                lines.push_back(lr);
            }
            rec["assignments"] = lines;
            rec["match"] = b.ok;
            arr.push_back(rec);
        }
        j["examples"] = arr;
        j["match"] = all_ok;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& b : blocks) {
            out << b.name << " (m=" << b.m << ", N=" << b.N << ")\n";
            for (unsigned i = 0; i < b.phi.size(); ++i)
                out << "  phi_" << (i + 1) << " = " << b.phi[i] << "\n";
            for (const auto& line : b.lines) {
                out << "  " << line.target << " -> " << line.computed << "\n";
                if (!line.ok) out << "    EXPECTED: " << line.expected << "\n";
            }
        }
        out << (all_ok ? "result: match\n" : "result: MISMATCH\n");
    }
    emit(out.str(), o.output);
    return all_ok ? 0 : 2;
}

// ---------------------------------------------------------------------------
// verify

Polynomial<Rational> random_poly(Rng& rng, unsigned num_vars, unsigned max_degree,
                                 long long bound) {
    Polynomial<Rational> p(num_vars);
    for (unsigned d = 0; d <= max_degree; ++d) {
        std::vector<ExponentVector> exps;
        exponents_of_degree(num_vars, d, exps);
        for (const auto& e : exps)
            if (rng.coin()) p.add_term(e, Rational(rng.int_in(-bound, bound)));
    }
    return p;
}

struct SuiteResult {
    const char* name;
    unsigned pass = 0;
    unsigned fail = 0;
    std::string counterexample;
};

template <typename DescribeFn>
void record(SuiteResult& s, bool ok, DescribeFn&& describe) {
    if (ok) {
        ++s.pass;
        return;
    }
    ++s.fail;
    if (s.counterexample.empty()) s.counterexample = describe();
}

int cmd_verify(const Opts& o, bool m_given, bool N_given) {
    if (o.trials < 1) throw ValidationError("trials must be at least 1");
    std::vector<std::pair<unsigned, unsigned>> grid;
    if (m_given || N_given) {
        if (!(m_given && N_given))
            throw ValidationError("give both --m and --N to restrict the grid");
        grid = {{o.m, o.N}};
    } else {
        grid = {{1, 3}, {2, 2}, {3, 2}};
    }

    Rng master(o.seed);
    std::ostringstream out;
    if (o.verbose) {
        out << "config: seed " << o.seed << ", trials " << o.trials << ", grid";
        for (auto [m, N] : grid) out << " (m=" << m << ",N=" << N << ")";
        out << "\n";
    }

    bool any_fail = false;
    for (auto [m, N] : grid) {
        SuiteResult suites[6] = {{"homomorphism"}, {"inverse"},        {"round-trip"},
                                 {"block-triangular"}, {"oracle"},     {"leibniz"}};
        DifferentialContext ctx(m, N);
        NameScheme xs = NameScheme::x_only(m);

        for (unsigned t = 0; t < o.trials; ++t) {
            Rng rng(master.next_u64());
            auto phi = random_automorphism(m, N, rng.next_u64());
            auto psi = random_automorphism(m, N, rng.next_u64());
            AlphaImage<Rational> img_phi = alpha(phi);
            AlphaImage<Rational> img_psi = alpha(psi);
            auto pair_text = [&] { return "phi = " + describe_map(phi) + ", psi = " + describe_map(psi); };

            record(suites[0],
                   alpha(compose(phi, psi)).base.forward() ==
                       compose_poly(img_phi.base.forward(), img_psi.base.forward()),
                   pair_text);

            {
                bool ok = false;
                std::string note;
                try {
                    auto series_route = alpha(invert(phi)).base.forward();
                    auto block_route = invert_block_triangular(img_phi.base.forward(), m).inverse();
                    ok = series_route == block_route;
                } catch (const Error& e) {
                    note = std::string(" (") + e.what() + ")";
                }
                record(suites[1], ok, [&] { return "phi = " + describe_map(phi) + note; });
            }

            {
                bool ok = false;
                std::string note;
                try {
                    AlphaImage<Rational> img = img_phi;
                    if (o.inject_fault) {
                        auto comps = img_phi.base.forward().components;
                        ExponentVector e(ctx.num_y(), 0);
                        e[0] = 1;
                        comps.back() += Polynomial<Rational>::monomial(ctx.num_y(), e, Rational(1));
                        img = AlphaImage<Rational>{
                            PolyAutomorphism<Rational>(PolyEndo<Rational>(ctx.num_y(), comps)), m, N};
                    }
                    ok = recover_series(img) == phi;
                } catch (const StructureError& e) {
                    note = std::string(" (decode rejected the image: ") + e.what() + ")";
                }
                record(suites[2], ok, [&] { return "phi = " + describe_map(phi) + note; });
            }

            record(suites[3], is_block_triangular(img_phi.base.forward(), m),
                   [&] { return "phi = " + describe_map(phi); });

            {
                auto f = random_poly(rng, m, 3, 9);
                bool ok = true;
                for (unsigned n = 1; n <= N && ok; ++n)
                    ok = higher_differential(f, n, ctx) == taylor_oracle(f, n, ctx);
                record(suites[4], ok, [&] { return "f = " + render(f, xs); });
            }

            {
                auto f = random_poly(rng, m, 2, 6);
                auto g = random_poly(rng, m, 2, 6);
                bool ok = true;
                for (unsigned n = 1; n <= N && ok; ++n) {
                    Polynomial<Rational> lhs = higher_differential(f * g, n, ctx);
                    Polynomial<Rational> rhs(ctx.num_ambient());
                    for (unsigned j = 0; j <= n; ++j) {
                        Polynomial<Rational> dj =
                            j == 0 ? ctx.embed_x(f) : higher_differential(f, j, ctx);
                        Polynomial<Rational> dk =
                            j == n ? ctx.embed_x(g) : higher_differential(g, n - j, ctx);
                        rhs += dj * dk;
                    }
                    ok = lhs == rhs;
                }
                record(suites[5], ok,
                       [&] { return "f = " + render(f, xs) + ", g = " + render(g, xs); });
            }
        }

        out << "m=" << m << " N=" << N << ":";
        for (const auto& s : suites) out << "  " << s.name << " " << s.pass << "/" << (s.pass + s.fail);
        out << "\n";
        for (const auto& s : suites) {
            if (s.fail == 0) continue;
            any_fail = true;
            out << "  first counterexample (" << s.name << "): " << s.counterexample << "\n";
        }
    }

    if (any_fail)
        out << "verification FAILED\n";
    else
        out << "all verification suites passed (seed " << o.seed << ", trials " << o.trials
            << ")\n";
    emit(out.str(), o.output);
    return any_fail ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"higher differentials of truncated power series maps and the induced "
                 "polynomial automorphisms"};
    app.require_subcommand(1);
    Opts o;

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"plain", "latex", "json"}))
            ->capture_default_str();
    };
    auto add_output = [&](CLI::App* c) {
        c->add_option("--output", o.output, "write output to this file instead of stdout");
    };

    CLI::App* diff = app.add_subcommand("diff", "print d^1 f .. d^N f for a polynomial f");
    diff->add_option("expr", o.exprs, "polynomial in x1..xm")->required()->expected(1);
    diff->add_option("--m", o.m, "number of x variables")->capture_default_str();
    diff->add_option("--N", o.N, "truncation order")->capture_default_str();
    add_format(diff);
    add_output(diff);

    CLI::App* al = app.add_subcommand("alpha", "map a series automorphism to its polynomial image");
    al->add_option("components", o.exprs, "component expressions in x1..xm");
    al->add_option("--m", o.m, "number of variables (defaults to the component count)");
    al->add_option("--N", o.N, "truncation order")->capture_default_str();
    al->add_option("--input", o.input, "read a series_map record from this file");
    al->add_flag("--verify", o.verify_flag,
                 "recompute every component through the differential route and compare");
    add_format(al);
    add_output(al);

    CLI::App* co = app.add_subcommand("compose", "compose two serialized maps (f then g gives f(g))");
    co->add_option("f", o.file_a, "left map record")->required();
    co->add_option("g", o.file_b, "right map record")->required();
    add_format(co);
    add_output(co);

    CLI::App* inv = app.add_subcommand("invert", "invert a serialized map record");
    inv->add_option("file", o.file_a, "map record to invert");
    inv->add_option("--input", o.input, "map record to invert");
    inv->add_option("--m", o.block,
                    "block size for block-triangular inversion (default: try 1, then n)");
    add_format(inv);
    add_output(inv);

    CLI::App* cl = app.add_subcommand("classify", "report structural properties of a map record");
    cl->add_option("file", o.file_a, "map record to classify");
    cl->add_option("--input", o.input, "map record to classify");
    add_format(cl);
    add_output(cl);

    CLI::App* em = app.add_subcommand("embed",
                                      "embed a polynomial automorphism of m-space into m + N*m "
                                      "variables through its higher differentials");
    em->add_option("components", o.exprs, "component expressions in x1..xm");
    em->add_option("--m", o.m, "number of variables (defaults to the component count)");
    em->add_option("--N", o.N, "highest differential order")->capture_default_str();
    em->add_option("--input", o.input, "read a poly_endo record from this file");
    add_format(em);
    add_output(em);

    CLI::App* ve = app.add_subcommand("verify", "run the randomized property suites");
    ve->add_option("--m", o.m, "restrict the grid to one point (with --N)");
    ve->add_option("--N", o.N, "restrict the grid to one point (with --m)");
    ve->add_option("--seed", o.seed, "random seed")->capture_default_str();
    ve->add_option("--trials", o.trials, "trials per suite")->capture_default_str();
    ve->add_flag("--inject-fault", o.inject_fault)->group("");
    ve->add_flag("--verbose", o.verbose, "echo the configuration");
    add_output(ve);

    CLI::App* ex = app.add_subcommand("examples", "recompute the two worked examples and check them");
    add_format(ex);
    add_output(ex);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (diff->parsed()) return cmd_diff(o);
        if (al->parsed()) return cmd_alpha(o, al->count("--m") > 0);
        if (co->parsed()) return cmd_compose(o);
        if (inv->parsed()) return cmd_invert(o);
        if (cl->parsed()) return cmd_classify(o);
        if (em->parsed()) return cmd_embed(o, em->count("--m") > 0);
        if (ve->parsed()) return cmd_verify(o, ve->count("--m") > 0, ve->count("--N") > 0);
        if (ex->parsed()) return cmd_examples(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error at position " << e.position << ": " << e.what() << "\n";
        return 1;
    } catch (const StructureError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

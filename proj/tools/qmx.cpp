// qmx: exact Gröbner–Shirshov toolkit for the standard quantized matrix
// algebra M_q(n): defining relations, basis verification, PBW normal forms,
// Hilbert series, and degree-truncated elimination.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qmx/elimination.hpp"
#include "qmx/expr.hpp"
#include "qmx/gsb.hpp"
#include "qmx/pbw.hpp"

namespace {

using Report = nlohmann::ordered_json;

// exit codes: 0 success, 2 bad arguments/usage, 3 input parse error,
// 4 verification failure (a non-trivial composition)
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitVerifyFailed = 4;

struct Options {
    int n = 2;
    std::string q_text = "generic";
    std::string format = "text";
    unsigned jobs = 1;
    bool trace = false;
    bool allow_large_n = false;

    qmx::QMode mode = qmx::QMode::generic();
    bool machine() const { return format == "machine"; }
};

void emit(const Options& opt, const Report& rec) {
    if (opt.machine()) std::cout << rec.dump() << "\n";
}

std::string mpz_str(const mpz_class& v) { return v.get_str(); }

int run_relations(const Options& opt) {
    auto S = qmx::RelationSet::build(opt.n, opt.mode);

    std::map<std::string, std::size_t> class_counts;
    for (const auto& r : S.relations()) ++class_counts[std::string(1, qmx::class_letter(r.cls))];

    if (opt.machine()) {
        Report head{{"record", "relation_set"},
                    {"n", opt.n},
                    {"q", opt.mode.str()},
                    {"count", S.size()},
                    {"class_counts", class_counts}};
        emit(opt, head);
        for (const auto& r : S.relations()) {
            Report rec{{"record", "relation"},
                       {"class", std::string(1, qmx::class_letter(r.cls))},
                       {"name", r.name()},
                       {"indices", r.indices},
                       {"leading", r.leading.str()},
                       {"poly", r.poly.str()}};
            emit(opt, rec);
        }
    } else {
        std::cout << "defining relations of M_q(" << opt.n << "), q = " << opt.mode.str() << ": "
                  << S.size() << " relations (";
        bool first = true;
        for (const auto& [cls, count] : class_counts) {
            if (!first) std::cout << ", ";
            std::cout << cls << ": " << count;
            first = false;
        }
        std::cout << ")\n";
        for (const auto& r : S.relations())
            std::cout << "  " << r.name() << ": " << r.poly.str() << "\n";
    }
    return kExitOk;
}

int run_verify(const Options& opt) {
    auto S = qmx::RelationSet::build(opt.n, opt.mode);
    qmx::VerifyOptions vo;
    vo.jobs = opt.jobs;
    vo.keep_traces = opt.trace;
    vo.retain_reports = opt.trace;
    auto verdict = qmx::verify_gsb(S, vo);

    if (opt.machine()) {
        if (opt.trace) {
            for (const auto& rep : verdict.reports) {
                Report rec{{"record", "composition"},
                           {"overlap", rep.ambiguity.overlap.str()},
                           {"family", rep.family},
                           {"left", rep.ambiguity.left->name()},
                           {"right", rep.ambiguity.right->name()},
                           {"trivial", rep.trivial},
                           {"steps", rep.steps},
                           {"remainder", rep.remainder.str()}};
                emit(opt, rec);
            }
        }
        Report rec{{"record", "gsb_verdict"},
                   {"n", opt.n},
                   {"q", opt.mode.str()},
                   {"total", verdict.total_ambiguities},
                   {"trivial", verdict.trivial_count()},
                   {"failures", verdict.failures.size()},
                   {"confirmed", verdict.confirmed()},
                   {"max_steps", verdict.max_steps},
                   {"families", verdict.family_histogram}};
        emit(opt, rec);
    } else {
        std::cout << "n=" << opt.n << ", q=" << opt.mode.str() << ": " << verdict.trivial_count()
                  << "/" << verdict.total_ambiguities << " compositions trivial";
        std::cout << (verdict.confirmed() ? " -- Grobner-Shirshov basis confirmed\n"
                                          : " -- BASIS NOT CONFIRMED\n");
        std::cout << "composition families:\n";
        for (const auto& [family, count] : verdict.family_histogram)
            std::cout << "  " << family << ": " << count << "\n";
        std::cout << "longest reduction: " << verdict.max_steps << " steps\n";
        if (opt.trace) {
            for (const auto& rep : verdict.reports)
                std::cout << "  " << rep.ambiguity.overlap.str() << "  [" << rep.family << "]  "
                          << (rep.trivial ? "trivial" : "NON-TRIVIAL: " + rep.remainder.str())
                          << " in " << rep.steps << " steps\n";
        }
        for (const auto& rep : verdict.failures)
            std::cout << "FAILURE at " << rep.ambiguity.overlap.str() << " [" << rep.family
                      << "]: remainder " << rep.remainder.str() << "\n";
    }
    return verdict.confirmed() ? kExitOk : kExitVerifyFailed;
}

int run_nf(const Options& opt, std::vector<std::string> exprs, const std::string& file) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "cannot open " << file << "\n";
            return kExitParse;
        }
        std::string line;
        while (std::getline(in, line))
            if (line.find_first_not_of(" \t") != std::string::npos) exprs.push_back(line);
    }
    auto S = qmx::RelationSet::build(opt.n, opt.mode);
    for (const auto& text : exprs) {
        qmx::NCPoly p = qmx::parse_poly(text, opt.n, opt.mode);
        qmx::ReduceOptions ro;
        ro.keep_trace = opt.trace;
        auto red = qmx::reduce_full(p, S, ro);
        if (opt.machine()) {
            Report rec{{"record", "normal_form"},
                       {"n", opt.n},
                       {"q", opt.mode.str()},
                       {"input", text},
                       {"normal_form", red.normal_form.str()},
                       {"steps", red.steps}};
            if (opt.trace) {
                Report steps = Report::array();
                for (const auto& st : red.trace)
                    steps.push_back(Report{{"word", st.from.str()},
                                           {"position", st.position},
                                           {"relation", st.rel->name()}});
                rec["trace"] = steps;
            }
            emit(opt, rec);
        } else {
            std::cout << red.normal_form.str() << "\n";
            if (opt.trace)
                for (const auto& st : red.trace)
                    std::cout << "  rewrote " << st.from.str() << " at position " << st.position
                              << " by " << st.rel->name() << "\n";
        }
    }
    return kExitOk;
}

int run_pbw(const Options& opt, int degree, std::size_t limit) {
    auto words = qmx::enumerate_normal(opt.n, degree);
    mpz_class count = qmx::normal_word_count(opt.n, degree);
    if (opt.machine()) {
        Report list = Report::array();
        for (std::size_t i = 0; i < words.size() && i < limit; ++i)
            list.push_back(words[i].to_word().str());
        Report rec{{"record", "pbw_words"},
                   {"n", opt.n},
                   {"degree", degree},
                   {"count", mpz_str(count)},
                   {"words", list}};
        emit(opt, rec);
    } else {
        std::cout << count.get_str() << " normal words of degree " << degree << " (n=" << opt.n
                  << ")\n";
        for (std::size_t i = 0; i < words.size() && i < limit; ++i)
            std::cout << "  " << words[i].to_word().str() << "\n";
        if (words.size() > limit) std::cout << "  ... (" << words.size() - limit << " more)\n";
    }
    return kExitOk;
}

int run_hilbert(const Options& opt, int maxdeg, bool check, bool gk) {
    auto h = qmx::hilbert(opt.n, maxdeg);
    auto cumulative = h.cumulative();

    bool enum_match = true;
    std::vector<int> rank_checked;
    bool rank_match = true;
    if (check) {
        // enumeration cross-check where the count stays desk-sized
        for (int d = 0; d <= maxdeg; ++d) {
            if (h.dims[static_cast<std::size_t>(d)] > 200000) break;
            auto words = qmx::enumerate_normal(opt.n, d);
            if (mpz_class(words.size()) != h.dims[static_cast<std::size_t>(d)]) enum_match = false;
        }
        // brute-force rank oracle at n = 2, low degree
        if (opt.n == 2) {
            auto S = qmx::RelationSet::build(opt.n, opt.mode);
            for (int d = 0; d <= std::min(maxdeg, 3); ++d) {
                rank_checked.push_back(d);
                if (mpz_class(qmx::bruteforce_graded_dimension(d, S)) != h.dims[static_cast<std::size_t>(d)])
                    rank_match = false;
            }
        }
    }

    if (opt.machine()) {
        Report dims = Report::array(), cums = Report::array();
        for (const auto& v : h.dims) dims.push_back(mpz_str(v));
        for (const auto& v : cumulative) cums.push_back(mpz_str(v));
        Report rec{{"record", "hilbert"},
                   {"n", opt.n},
                   {"max_degree", maxdeg},
                   {"dims", dims},
                   {"cumulative", cums}};
        emit(opt, rec);
        if (check) {
            Report chk{{"record", "hilbert_check"},
                       {"n", opt.n},
                       {"enumeration_match", enum_match},
                       {"rank_oracle_degrees", rank_checked},
                       {"rank_oracle_match", rank_match}};
            emit(opt, chk);
        }
        if (gk) {
            Report rec2{{"record", "gk_readout"},
                        {"n", opt.n},
                        {"gk_dimension", qmx::gk_dimension_readout(opt.n, maxdeg)}};
            emit(opt, rec2);
        }
    } else {
        std::cout << "Hilbert coefficients of M_q(" << opt.n << "), d = 0.." << maxdeg << ":\n ";
        for (const auto& v : h.dims) std::cout << " " << v.get_str();
        std::cout << "\ncumulative:\n ";
        for (const auto& v : cumulative) std::cout << " " << v.get_str();
        std::cout << "\n";
        if (check) {
            std::cout << "enumeration cross-check: " << (enum_match ? "passed" : "FAILED") << "\n";
            if (!rank_checked.empty())
                std::cout << "rank oracle (degrees 0.." << rank_checked.back()
                          << "): " << (rank_match ? "passed" : "FAILED") << "\n";
        }
        if (gk)
            std::cout << "GK dimension readout: " << qmx::gk_dimension_readout(opt.n, maxdeg) << "\n";
    }
    return (enum_match && rank_match) ? kExitOk : kExitVerifyFailed;
}

int run_pattern(const Options& opt) {
    auto S = qmx::RelationSet::build(opt.n, opt.mode);
    auto pc = qmx::check_pattern_hypothesis(S);
    if (opt.machine()) {
        Report order = Report::array(), missing = Report::array(), unexpected = Report::array();
        for (const auto& g : pc.witness_order) order.push_back(g.str());
        for (const auto& w : pc.missing) missing.push_back(w.str());
        for (const auto& w : pc.unexpected) unexpected.push_back(w.str());
        Report rec{{"record", "pattern_hypothesis"},
                   {"n", opt.n},
                   {"holds", pc.holds},
                   {"witness_order", order},
                   {"missing", missing},
                   {"unexpected", unexpected}};
        emit(opt, rec);
    } else {
        if (pc.holds) {
            std::cout << "leading words are exactly the ascending pairs under the order\n  ";
            for (std::size_t i = 0; i < pc.witness_order.size(); ++i) {
                if (i) std::cout << " < ";
                std::cout << pc.witness_order[i].str();
            }
            std::cout << "\n";
        } else {
            std::cout << "pattern hypothesis FAILS\n";
            for (const auto& w : pc.missing) std::cout << "  missing leading word " << w.str() << "\n";
            for (const auto& w : pc.unexpected) std::cout << "  unexpected leading word " << w.str() << "\n";
        }
    }
    return pc.holds ? kExitOk : kExitVerifyFailed;
}

int run_eliminate(const Options& opt, const std::vector<std::string>& gen_exprs,
                  const std::string& gens_file, const std::string& subset_text, int degree) {
    std::vector<std::string> texts = gen_exprs;
    if (!gens_file.empty()) {
        std::ifstream in(gens_file);
        if (!in) {
            std::cerr << "cannot open " << gens_file << "\n";
            return kExitParse;
        }
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.find_first_not_of(" \t") != std::string::npos)
                texts.push_back(line);
        }
    }

    qmx::EliminationProblem prob;
    prob.n = opt.n;
    prob.degree_bound = degree;
    for (const auto& t : texts) prob.generators.push_back(qmx::parse_poly(t, opt.n, opt.mode));

    // subset: comma-separated generator names (commas inside Z[i,j] do not
    // split), canonicalized to the single-index order
    std::vector<std::string> items;
    std::string item;
    int depth = 0;
    for (char c : subset_text) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == ',' && depth == 0) {
            items.push_back(item);
            item.clear();
        } else {
            item += c;
        }
    }
    if (!item.empty()) items.push_back(item);
    for (const auto& text : items) {
        qmx::Expr e = qmx::parse_expr(text, opt.n);
        if (e.kind != qmx::Expr::Kind::Gen)
            throw qmx::ParseError(0, "subset entries must be generators like Z[2,2]");
        prob.subset.push_back(e.gen);
    }
    std::sort(prob.subset.begin(), prob.subset.end(), [&](qmx::Generator a, qmx::Generator b) {
        return qmx::single_index(a, opt.n) < qmx::single_index(b, opt.n);
    });
    for (std::size_t i = 1; i < prob.subset.size(); ++i)
        if (prob.subset[i] == prob.subset[i - 1])
            throw qmx::ParseError(0, "duplicate subset entry " + prob.subset[i].str());

    prob.validate();
    auto S = qmx::RelationSet::build(opt.n, opt.mode);
    auto outcome = qmx::find_witness(prob, S);
    bool verified = outcome.witness && qmx::verify_witness(outcome, prob, S);

    if (opt.machine()) {
        Report subset = Report::array();
        for (const auto& g : prob.subset) subset.push_back(g.str());
        Report rec{{"record", "elimination"},
                   {"n", opt.n},
                   {"q", opt.mode.str()},
                   {"degree_bound", degree},
                   {"subset", subset},
                   {"num_generators", prob.generators.size()},
                   {"witness_found", outcome.witness.has_value()},
                   {"witness", outcome.witness ? outcome.witness->str() : ""},
                   {"witness_verified", verified},
                   {"explored_dimension", outcome.explored_dimension},
                   {"quotient_dims", outcome.quotient_dims}};
        emit(opt, rec);
    } else {
        if (outcome.witness) {
            std::cout << "witness: " << outcome.witness->str() << "\n";
            std::cout << "soundness re-verified by reconstruction: " << (verified ? "yes" : "NO")
                      << "\n";
        } else {
            std::cout << "no witness up to degree " << degree << "\n";
        }
        std::cout << "explored dimension (rank of truncated ideal): " << outcome.explored_dimension
                  << "\n";
        std::cout << "quotient dims (deg <= d, advisory):";
        for (auto d : outcome.quotient_dims) std::cout << " " << d;
        std::cout << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Grobner-Shirshov toolkit for the quantized matrix algebra M_q(n)"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--n", opt.n, "matrix size n (>= 2)")->capture_default_str();
    app.add_option("--q", opt.q_text, "quantum parameter: 'generic' or a nonzero rational")
        ->capture_default_str();
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
    app.add_option("--jobs", opt.jobs, "parallel verification workers")->capture_default_str();
    app.add_flag("--trace", opt.trace, "retain and print reduction traces");
    app.add_flag("--allow-large-n", opt.allow_large_n, "lift the default n <= 6 guard");

    auto* cmd_relations = app.add_subcommand("relations", "print the defining relation set");
    auto* cmd_verify = app.add_subcommand("verify", "check that all compositions reduce to zero");

    std::vector<std::string> nf_exprs;
    std::string nf_file;
    auto* cmd_nf = app.add_subcommand("nf", "reduce expressions to PBW normal form");
    cmd_nf->add_option("expr", nf_exprs, "expressions like \"Z[1,1]*Z[2,2]\"");
    cmd_nf->add_option("--file", nf_file, "file with one expression per line");

    int pbw_degree = 2;
    std::size_t pbw_limit = 1000;
    auto* cmd_pbw = app.add_subcommand("pbw", "list PBW normal words of a degree");
    cmd_pbw->add_option("--deg", pbw_degree, "word degree")->capture_default_str();
    cmd_pbw->add_option("--limit", pbw_limit, "print at most this many words")->capture_default_str();

    int hb_maxdeg = 5;
    bool hb_check = false, hb_gk = false;
    auto* cmd_hilbert = app.add_subcommand("hilbert", "graded dimensions of M_q(n)");
    cmd_hilbert->add_option("--maxdeg", hb_maxdeg, "highest degree")->capture_default_str();
    cmd_hilbert->add_flag("--check", hb_check, "run the enumeration and rank-oracle cross-checks");
    cmd_hilbert->add_flag("--gk", hb_gk, "print the GK-dimension readout (needs maxdeg >= n^2+1)");

    auto* cmd_pattern = app.add_subcommand("pattern", "check the leading-monomial pattern hypothesis");

    std::vector<std::string> el_gens;
    std::string el_gens_file, el_subset;
    int el_degree = 0;
    auto* cmd_eliminate = app.add_subcommand("eliminate", "degree-truncated elimination witness search");
    cmd_eliminate->add_option("--gens", el_gens, "left-ideal generator expressions");
    cmd_eliminate->add_option("--gens-file", el_gens_file, "file with one generator expression per line");
    cmd_eliminate->add_option("--subset", el_subset, "comma-separated generators, e.g. Z[2,2],Z[1,1]")
        ->required();
    cmd_eliminate->add_option("--degree", el_degree, "degree bound")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (opt.n < 2) {
        std::cerr << "--n must be at least 2\n";
        return kExitUsage;
    }
    if (opt.n > 6 && !opt.allow_large_n) {
        std::cerr << "n > 6 builds " << (static_cast<long>(opt.n) * opt.n) *
                                            (static_cast<long>(opt.n) * opt.n - 1) / 2
                  << " relations; pass --allow-large-n to proceed\n";
        return kExitUsage;
    }
    try {
        opt.mode = (opt.q_text == "generic") ? qmx::QMode::generic()
                                             : qmx::QMode::numeric(qmx::Rational::parse(opt.q_text));
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad --q value: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (cmd_relations->parsed()) return run_relations(opt);
        if (cmd_verify->parsed()) return run_verify(opt);
        if (cmd_nf->parsed()) {
            if (nf_exprs.empty() && nf_file.empty()) {
                std::cerr << "nf needs expressions or --file\n";
                return kExitUsage;
            }
            return run_nf(opt, nf_exprs, nf_file);
        }
        if (cmd_pbw->parsed()) return run_pbw(opt, pbw_degree, pbw_limit);
        if (cmd_hilbert->parsed()) return run_hilbert(opt, hb_maxdeg, hb_check, hb_gk);
        if (cmd_pattern->parsed()) return run_pattern(opt);
        if (cmd_eliminate->parsed())
            return run_eliminate(opt, el_gens, el_gens_file, el_subset, el_degree);
    } catch (const qmx::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}

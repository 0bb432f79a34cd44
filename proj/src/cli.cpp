#include "bergetool/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "bergetool/canonical.hpp"
#include "bergetool/census.hpp"
#include "bergetool/constructions.hpp"
#include "bergetool/detectors.hpp"
#include "bergetool/errors.hpp"
#include "bergetool/hgr_io.hpp"
#include "bergetool/witness.hpp"

namespace berge::cli {

namespace {

struct AssertFailed {};  // domain negative under --assert-free

Variant parse_variant(const std::string& s) {
    if (s == "cycles") return Variant::cycles;
    if (s == "paths") return Variant::paths;
    throw InvalidParams("variant must be 'cycles' or 'paths'");
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void run_check(const std::string& file, std::optional<int> min_cycle,
               std::optional<int> path_len, bool assert_free, bool certificate,
               bool pretty, std::ostream& out) {
    Hypergraph h = read_hgr_file(file);
    if (min_cycle) {
        auto cycle = find_berge_cycle_at_least(h, *min_cycle);
        if (cycle && !verify_certificate(h, *cycle))
            throw Error("detector emitted an invalid cycle certificate");
        if (pretty) {
            if (cycle)
                out << "Berge cycle of length " << cycle->length() << " found\n";
            else
                out << "no Berge cycle of length >= " << *min_cycle << "\n";
        } else if (cycle) {
            out << "cycle=found length=" << cycle->length() << "\n";
        } else {
            out << "cycle=none threshold=" << *min_cycle << "\n";
        }
        if (cycle && certificate) out << "certificate: " << to_line(*cycle) << "\n";
        if (cycle && assert_free) throw AssertFailed{};
    } else {
        auto path = find_berge_path(h, *path_len);
        if (path && !verify_certificate(h, *path))
            throw Error("detector emitted an invalid path certificate");
        if (pretty) {
            if (path)
                out << "Berge path of length " << *path_len << " found\n";
            else
                out << "no Berge path of length " << *path_len << "\n";
        } else if (path) {
            out << "path=found length=" << *path_len << "\n";
        } else {
            out << "path=none length=" << *path_len << "\n";
        }
        if (path && certificate) out << "certificate: " << to_line(*path) << "\n";
        if (path && assert_free) throw AssertFailed{};
    }
}

void run_census(const ExtremalQuery& q, const SearchConfig& cfg,
                bool enumerate, std::ostream& out) {
    CensusResult res = turan_census(q, cfg);
    out << "query=census n=" << q.n << " r=" << q.r << " k=" << q.k
        << " variant=" << (q.variant == Variant::cycles ? "cycles" : "paths")
        << " multi=" << yesno(q.multi);
    if (q.multi) out << " cap=" << cfg.multiplicity_cap;
    out << "\n";
    out << "value=" << res.value;
    if (res.formula) out << " formula=" << *res.formula
                         << " match=" << yesno(*res.formula == res.value);
    out << " exhaustive=" << yesno(res.exhaustive) << "\n";
    out << "nodes=" << res.explored << "\n";
    if (q.multi && cfg.multiplicity_cap < q.k - 1 && q.k < q.r)
        out << "remark_bound="
            << capped_multi_bound(q.n, q.r, q.k, cfg.multiplicity_cap) << "\n";
    out << "witness:\n" << write_hgr(res.witness_graph);
    if (enumerate) {
        auto classes = enumerate_extremal(q, cfg);
        out << "extremal_classes=" << classes.size() << "\n";
        for (size_t i = 0; i < classes.size(); ++i) {
            out << "class=" << i + 1 << " " << to_line(recognize(classes[i])) << "\n";
            out << write_hgr(classes[i]);
        }
    }
}

void run_witness(const std::string& file, int k, int m, bool trace, bool verify,
                 std::ostream& out) {
    Hypergraph h = read_hgr_file(file);
    WitnessReport rep = find_witness(h, k, m);
    if (trace)
        for (const auto& line : rep.trace) out << line << "\n";
    out << to_line(rep.witness) << "\n";
    out << "fallback=" << yesno(rep.fallback_used) << "\n";
    if (verify) {
        auto [ok, viol] = verify_witness(h, k, m, rep.witness);
        out << "verified=" << yesno(ok) << "\n";
        for (const auto& v : viol) out << "violation: " << v << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Berge path and cycle analysis for r-uniform hypergraphs"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "detect Berge cycles or paths");
    std::string check_file;
    int min_cycle = 0, path_len = 0;
    bool assert_free = false, certificate = false, check_pretty = false;
    check->add_option("--file", check_file, "input HGR file")->required();
    auto* opt_cycle = check->add_option("--min-cycle", min_cycle,
                                        "search for a Berge cycle of length >= K");
    auto* opt_path = check->add_option("--path-len", path_len,
                                       "search for a Berge path of length exactly K");
    opt_cycle->excludes(opt_path);
    check->add_flag("--assert-free", assert_free, "exit 1 when the structure exists");
    check->add_flag("--certificate", certificate, "print the certificate line");
    check->add_flag("--pretty", check_pretty, "human-readable report");

    // construct star | block-tree
    auto* construct = app.add_subcommand("construct", "emit an extremal family member");
    construct->require_subcommand(1);
    auto* star = construct->add_subcommand("star", "r-star with center {1..r-1}");
    int star_n = 0, star_r = 0;
    std::string star_out;
    star->add_option("--n", star_n)->required();
    star->add_option("--r", star_r)->required();
    star->add_option("-o,--output", star_out, "output HGR file")->required();
    auto* btree = construct->add_subcommand("block-tree", "tree of uniform blocks");
    int bt_r = 0, bt_k = 0, bt_blocks = 1, bt_s = 0;
    bool bt_chain = false, bt_multi = false;
    std::vector<std::string> bt_attach;
    std::string bt_out;
    btree->add_option("--r", bt_r)->required();
    btree->add_option("--k", bt_k)->required();
    btree->add_option("--blocks", bt_blocks)->required();
    btree->add_option("--s", bt_s, "block size (defaults to r+1, or r with --multi)");
    auto* opt_chain =
        btree->add_flag("--chain", bt_chain, "attach each block to the previous one");
    btree->add_option("--attach", bt_attach,
                      "explicit attachment j:parent:slot (repeatable)")
        ->excludes(opt_chain);
    btree->add_flag("--multi", bt_multi, "blocks of r vertices with parallel copies");
    btree->add_option("-o,--output", bt_out, "output HGR file")->required();

    // extremal
    auto* extremal = app.add_subcommand("extremal", "closed-form extremal value");
    int ex_n = 0, ex_r = 0, ex_k = 0;
    std::string ex_variant;
    bool ex_multi = false;
    extremal->add_option("--n", ex_n)->required();
    extremal->add_option("--r", ex_r)->required();
    extremal->add_option("--k", ex_k)->required();
    extremal->add_option("--variant", ex_variant, "cycles or paths")->required();
    extremal->add_flag("--multi", ex_multi);

    // census
    auto* census = app.add_subcommand("census", "exhaustive Turan-number search");
    int ce_n = 0, ce_r = 0, ce_k = 0, ce_cap = 1, ce_workers = 1, ce_max_edges = 0;
    long long ce_max_nodes = 0;
    std::string ce_variant;
    bool ce_multi = false, ce_enumerate = false;
    census->add_option("--n", ce_n)->required();
    census->add_option("--r", ce_r)->required();
    census->add_option("--k", ce_k)->required();
    census->add_option("--variant", ce_variant, "cycles or paths")->required();
    census->add_flag("--multi", ce_multi);
    census->add_option("--cap", ce_cap, "multiplicity cap (multi mode)");
    census->add_flag("--enumerate-extremal", ce_enumerate,
                     "list extremal isomorphism classes");
    census->add_option("--workers", ce_workers, "parallel work items");
    census->add_option("--max-nodes", ce_max_nodes, "node budget (0 = unlimited)");
    census->add_option("--max-edges", ce_max_edges,
                       "cap the edge count explored (0 = unlimited)");

    // witness
    auto* witness = app.add_subcommand("witness", "structural witness finder");
    std::string wi_file;
    int wi_k = 0, wi_m = 0;
    bool wi_trace = false, wi_verify = false;
    witness->add_option("--file", wi_file)->required();
    witness->add_option("--k", wi_k)->required();
    witness->add_option("--m", wi_m)->required();
    witness->add_flag("--trace", wi_trace, "narrate the construction");
    witness->add_flag("--verify", wi_verify, "re-check with the independent verifier");

    // recognize
    auto* recog = app.add_subcommand("recognize", "classify star / block tree / other");
    std::string re_file;
    bool re_pretty = false;
    recog->add_option("--file", re_file)->required();
    recog->add_flag("--pretty", re_pretty);

    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    try {
        app.parse(reversed_args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        err << app.help();
        return 2;
    }

    try {
        if (*check) {
            if (opt_cycle->count() == 0 && opt_path->count() == 0)
                throw InvalidParams("check needs --min-cycle or --path-len");
            run_check(check_file,
                      opt_cycle->count() ? std::optional<int>(min_cycle) : std::nullopt,
                      opt_path->count() ? std::optional<int>(path_len) : std::nullopt,
                      assert_free, certificate, check_pretty, out);
        } else if (*star) {
            Hypergraph h = r_star(star_n, star_r);
            write_hgr_file(h, star_out);
            out << "written=" << star_out << " n=" << h.n << " r=" << h.r
                << " edges=" << h.edge_count() << "\n";
        } else if (*btree) {
            int s = bt_s > 0 ? bt_s : (bt_multi ? bt_r : bt_r + 1);
            BlockTreeTemplate tmpl;
            if (!bt_attach.empty()) {
                tmpl.block_count = bt_blocks;
                std::vector<std::pair<int, int>> slots(
                    static_cast<size_t>(std::max(0, bt_blocks - 1)), {0, 0});
                for (const auto& spec : bt_attach) {
                    int j = 0, parent = 0, slot = 0;
                    char c1 = 0, c2 = 0;
                    std::istringstream in(spec);
                    if (!(in >> j >> c1 >> parent >> c2 >> slot) || c1 != ':' ||
                        c2 != ':' || j < 2 || j > bt_blocks)
                        throw InvalidParams("--attach expects j:parent:slot");
                    slots[static_cast<size_t>(j - 2)] = {parent, slot};
                }
                tmpl.attachments = slots;
            } else {
                tmpl = BlockTreeTemplate::chain(bt_blocks, s);
            }
            Hypergraph h = block_tree(tmpl, s, bt_r, bt_k);
            write_hgr_file(h, bt_out);
            out << "written=" << bt_out << " n=" << h.n << " r=" << h.r
                << " edges=" << h.edge_count() << "\n";
        } else if (*extremal) {
            ExtremalQuery q{ex_n, ex_r, ex_k, parse_variant(ex_variant), ex_multi};
            out << "value=" << extremal_value(q) << " regime=" << extremal_regime(q)
                << "\n";
        } else if (*census) {
            ExtremalQuery q{ce_n, ce_r, ce_k, parse_variant(ce_variant), ce_multi};
            SearchConfig cfg;
            cfg.multiplicity_cap = ce_multi ? ce_cap : 1;
            cfg.workers = ce_workers;
            cfg.max_nodes = ce_max_nodes;
            cfg.max_edges = ce_max_edges;
            run_census(q, cfg, ce_enumerate, out);
        } else if (*witness) {
            run_witness(wi_file, wi_k, wi_m, wi_trace, wi_verify, out);
        } else if (*recog) {
            Hypergraph h = read_hgr_file(re_file);
            Recognition rec = recognize(h);
            if (re_pretty) {
                switch (rec.kind) {
                    case Recognition::Kind::r_star: {
                        out << "r-star, center {";
                        for (size_t i = 0; i < rec.center.size(); ++i) {
                            if (i) out << ',';
                            out << rec.center[i];
                        }
                        out << "}\n";
                        break;
                    }
                    case Recognition::Kind::block_tree:
                        out << "block tree, " << rec.block_count << " block(s) of "
                            << rec.s << " vertices with " << rec.mu
                            << " hyperedge(s) each\n";
                        break;
                    case Recognition::Kind::other:
                        out << "neither star nor block tree\n";
                        break;
                }
            } else {
                out << to_line(rec) << "\n";
            }
        }
    } catch (const AssertFailed&) {
        return 1;
    } catch (const PreconditionViolated& e) {
        err << "error: " << e.what() << "\n";
        err << "certificate: " << e.certificate << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace berge::cli

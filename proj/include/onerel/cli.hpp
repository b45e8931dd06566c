#pragma once

// Command-line front end. `run` never exits the process; it returns
// 0 (success), 1 (a verification found a collision, kernel element or failed
// check) or 2 (usage or input error).

#include <cstddef>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "concrete_groups.hpp"
#include "embeddings.hpp"
#include "error.hpp"
#include "gbs.hpp"
#include "graphs.hpp"
#include "one_relator.hpp"
#include "raag.hpp"
#include "regression.hpp"
#include "stallings.hpp"
#include "trace.hpp"
#include "words.hpp"

namespace onerel::cli {

  inline constexpr int exit_ok       = 0;
  inline constexpr int exit_verify   = 1;
  inline constexpr int exit_usage    = 2;

  namespace detail {

    inline std::string read_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        fail(ErrorCode::InvalidArgument, "cannot read " + path);
      }
      std::ostringstream s;
      s << in.rdbuf();
      return s.str();
    }

    inline GraphRef load_graph(std::string const& path) {
      return make_graph_ref(parse_graph(read_file(path)));
    }

    //! Alphabet of a free group given as `a,b,c`.
    inline Alphabet free_alphabet(std::string const& list) {
      std::vector<std::string> names;
      std::stringstream        s(list);
      std::string              item;
      while (std::getline(s, item, ',')) {
        names.push_back(item);
      }
      return Alphabet(std::move(names));
    }

    //! A concrete group named `bs:<n>`, `trefoil` or `hnn-trefoil`, with
    //! parsing and canonical printing of its elements.
    struct NamedGroup {
      Alphabet                                 alphabet;
      std::function<std::string(FreeWord const&)> eval;
      std::function<bool(FreeWord const&, FreeWord const&)> equal;
    };

    inline NamedGroup named_group(std::string const& name) {
      if (name.rfind("bs:", 0) == 0) {
        int n = 0;
        try {
          n = std::stoi(name.substr(3));
        } catch (std::exception const&) {
          fail(ErrorCode::InvalidArgument, "bad modulus in " + name);
        }
        AffineElement{n};  // validates |n| >= 2
        return {bs::alphabet(),
                [n](FreeWord const& w) { return bs_from_word(n, w).to_string(); },
                [n](FreeWord const& u, FreeWord const& v) {
                  return bs_from_word(n, u) == bs_from_word(n, v);
                }};
      }
      if (name == "trefoil") {
        return {trefoil::alphabet(),
                [](FreeWord const& w) { return trefoil_from_word(w).to_string(); },
                [](FreeWord const& u, FreeWord const& v) {
                  return trefoil_from_word(u) == trefoil_from_word(v);
                }};
      }
      if (name == "hnn-trefoil") {
        return {hnn::alphabet(),
                [](FreeWord const& w) { return hnn_from_word(w).to_string(); },
                [](FreeWord const& u, FreeWord const& v) {
                  return hnn_from_word(u) == hnn_from_word(v);
                }};
      }
      fail(ErrorCode::InvalidArgument, "unknown group " + name + " (bs:<n>, trefoil, hnn-trefoil)");
    }

    inline std::string format_triple(WordTriple const& t) {
      Alphabet const a = free_monoid_alphabet();
      return "(" + format_word(t[0], a) + ", " + format_word(t[1], a) + ", "
             + format_word(t[2], a) + ")";
    }

    inline Alphabet star_alphabet(std::size_t k) {
      std::vector<std::string> names{"center"};
      for (std::size_t i = 1; i <= k; ++i) {
        names.push_back("leaf" + std::to_string(i));
      }
      return Alphabet(std::move(names));
    }

  }  // namespace detail

  inline int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Normal forms, embeddings and C*-simplicity verdicts for one-relator groups"};
    app.name("onerel");
    app.require_subcommand(1);

    int         code = exit_ok;
    std::string graph_file;
    std::size_t max_len = 0;

    // nf / eq -----------------------------------------------------------
    auto*       nf = app.add_subcommand("nf", "canonical form of a word");
    std::string nf_kind, nf_word;
    nf->add_option("kind", nf_kind, "trace or raag")->required()->check(CLI::IsMember({"trace", "raag"}));
    nf->add_option("word", nf_word, "word over the graph's vertices")->required();
    nf->add_option("--graph", graph_file, "graph file")->required();
    nf->callback([&] {
      auto g = detail::load_graph(graph_file);
      if (nf_kind == "trace") {
        out << format_word(normalize_trace(g, parse_positive_word(nf_word, g->alphabet())).nf(),
                           g->alphabet())
            << "\n";
      } else {
        out << format_word(normalize_raag(g, parse_word(nf_word, g->alphabet())).nf(), g->alphabet())
            << "\n";
      }
    });

    auto*       eq = app.add_subcommand("eq", "decide equality of two words");
    std::string eq_kind, eq_group, eq_u, eq_v;
    eq->add_option("kind", eq_kind, "trace, raag or group")
        ->required()
        ->check(CLI::IsMember({"trace", "raag", "group"}));
    eq->add_option("u", eq_u)->required();
    eq->add_option("v", eq_v)->required();
    eq->add_option("--graph", graph_file, "graph file (trace, raag)");
    eq->add_option("--group", eq_group, "bs:<n>, trefoil or hnn-trefoil (group)");
    eq->callback([&] {
      bool same = false;
      if (eq_kind == "group") {
        if (eq_group.empty()) {
          throw CLI::RequiredError("--group");
        }
        auto g = detail::named_group(eq_group);
        same   = g.equal(parse_word(eq_u, g.alphabet), parse_word(eq_v, g.alphabet));
      } else {
        if (graph_file.empty()) {
          throw CLI::RequiredError("--graph");
        }
        auto g = detail::load_graph(graph_file);
        if (eq_kind == "trace") {
          same = trace_equal(normalize_trace(g, parse_positive_word(eq_u, g->alphabet())),
                             normalize_trace(g, parse_positive_word(eq_v, g->alphabet())));
        } else {
          same = normalize_raag(g, parse_word(eq_u, g->alphabet()))
                 == normalize_raag(g, parse_word(eq_v, g->alphabet()));
        }
      }
      out << "equal=" << (same ? "true" : "false") << "\n";
    });

    // graph ------------------------------------------------------------
    auto*       graph = app.add_subcommand("graph", "graph queries");
    std::string graph_kind;
    std::size_t path_n = 4;
    graph->add_option("kind", graph_kind, "forest, diam or induced-path")
        ->required()
        ->check(CLI::IsMember({"forest", "diam", "induced-path"}));
    graph->add_option("n", path_n, "path length for induced-path");
    graph->add_option("--graph", graph_file, "graph file")->required();
    graph->callback([&] {
      auto g = detail::load_graph(graph_file);
      if (graph_kind == "forest") {
        out << "forest=" << (is_forest(*g) ? "true" : "false") << "\n";
      } else if (graph_kind == "diam") {
        out << "diameter=" << max_component_diameter(*g) << "\n";
      } else {
        auto p = find_induced_path(*g, path_n);
        if (!p) {
          out << "induced-path=none\n";
        } else {
          out << "induced-path=";
          for (std::size_t i = 0; i < p->size(); ++i) {
            out << (i ? " " : "") << g->name((*p)[i]);
          }
          out << "\n";
        }
      }
    });

    // stallings --------------------------------------------------------
    auto*                    st = app.add_subcommand("stallings", "subgroups of free groups");
    std::string              st_kind, st_gens = "a,b", st_word;
    std::vector<std::string> st_sub, st_other;
    std::size_t              st_rmax = 3;
    st->add_option("kind", st_kind, "rank, member, intersect or findpower")
        ->required()
        ->check(CLI::IsMember({"rank", "member", "intersect", "findpower"}));
    st->add_option("words", st_sub, "subgroup generators (findpower: the elements)");
    st->add_option("--gens", st_gens, "comma-separated free generators")->capture_default_str();
    st->add_option("--word", st_word, "word tested by member");
    st->add_option("--other", st_other, "generators of the second subgroup for intersect");
    st->add_option("--r-max", st_rmax, "largest power tried by findpower")->capture_default_str();
    st->callback([&] {
      auto const            a = detail::free_alphabet(st_gens);
      std::vector<FreeWord> h, k;
      for (auto const& s : st_sub) {
        h.push_back(parse_word(s, a));
      }
      for (auto const& s : st_other) {
        k.push_back(parse_word(s, a));
      }
      if (st_kind == "rank") {
        auto sg = from_generators(a.size(), h);
        out << "rank=" << subgroup_rank(sg) << " vertices=" << sg.num_vertices()
            << " edges=" << sg.num_edges()
            << " finite_index=" << (is_finite_index(sg) ? "true" : "false") << "\n";
      } else if (st_kind == "member") {
        out << "member="
            << (contains(from_generators(a.size(), h), parse_word(st_word, a)) ? "true" : "false")
            << "\n";
      } else if (st_kind == "intersect") {
        auto sg = intersect(from_generators(a.size(), h), from_generators(a.size(), k));
        out << "rank=" << subgroup_rank(sg) << " vertices=" << sg.num_vertices()
            << " edges=" << sg.num_edges() << "\n";
        for (auto const& e : sg.edges()) {
          out << "edge: " << e.from << " " << e.to << " " << a.name(e.label) << "\n";
        }
      } else {
        auto r = find_free_power(a.size(), h, st_rmax);
        out << "power=" << (r ? std::to_string(*r) : std::string("none")) << "\n";
      }
    });

    // group ------------------------------------------------------------
    auto*       grp = app.add_subcommand("group", "arithmetic in BS(1,n), the trefoil group and its HNN extension");
    std::string grp_name, grp_action, grp_word;
    grp->add_option("group", grp_name, "bs:<n>, trefoil or hnn-trefoil")->required();
    grp->add_option("action", grp_action, "eval")->required()->check(CLI::IsMember({"eval"}));
    grp->add_option("word", grp_word)->required();
    grp->callback([&] {
      auto g = detail::named_group(grp_name);
      out << g.eval(parse_word(grp_word, g.alphabet)) << "\n";
    });

    // gbs / classify ---------------------------------------------------
    auto*       gbs = app.add_subcommand("gbs", "generalised Baumslag-Solitar graphs");
    std::string gbs_action, gbs_file;
    gbs->add_option("action", gbs_action, "classify")->required()->check(CLI::IsMember({"classify"}));
    gbs->add_option("file", gbs_file, "GBS graph file")->required();
    gbs->callback([&] {
      auto g = parse_gbs(detail::read_file(gbs_file));
      out << classify_cstar(g).to_line() << "\n";
      out << "p_nai=" << (p_nai_verdict(g) ? "Yes" : "No") << "\n";
    });

    auto*       cls = app.add_subcommand("classify", "classify a one-relator presentation");
    std::string cls_text;
    cls->add_option("presentation", cls_text, "< a, b | relator >")->required();
    cls->callback([&] {
      auto p = parse_presentation(cls_text);
      out << classify(p).to_line() << "\n";
      out << "p_nai=" << to_string(p_nai(p)) << "\n";
    });

    // embed ------------------------------------------------------------
    auto*       emb = app.add_subcommand("embed", "apply an embedding map");
    std::string emb_kind, emb_word;
    std::size_t emb_k = 2;
    emb->add_option("kind", emb_kind, "phi-p4, paris, star or forest")
        ->required()
        ->check(CLI::IsMember({"phi-p4", "paris", "star", "forest"}));
    emb->add_option("word", emb_word)->required();
    emb->add_option("--graph", graph_file, "source graph (paris, forest; phi-p4 defaults to v1-v2-v3-v4)");
    emb->add_option("--leaves", emb_k, "number of leaves for star")->capture_default_str();
    emb->callback([&] {
      if (emb_kind == "star") {
        auto const a = detail::star_alphabet(emb_k);
        auto const e = star_embed(emb_k, parse_word(emb_word, a));
        out << format_word(e.nf(), e.graph()->alphabet()) << "\n";
        return;
      }
      if (emb_kind == "phi-p4") {
        auto g = graph_file.empty() ? make_graph_ref(path_graph(4)) : detail::load_graph(graph_file);
        out << detail::format_triple(phi_p4(normalize_trace(g, parse_positive_word(emb_word, g->alphabet()))))
            << "\n";
        return;
      }
      if (graph_file.empty()) {
        throw CLI::RequiredError("--graph");
      }
      auto g = detail::load_graph(graph_file);
      if (emb_kind == "paris") {
        out << format_word(paris(g, parse_positive_word(emb_word, g->alphabet())).nf(), g->alphabet())
            << "\n";
      } else {
        auto const target = path_graph(max_component_diameter(*g) + 1);
        out << format_free_product(forest_embed(*g, parse_word(emb_word, g->alphabet())),
                                   target.alphabet())
            << "\n";
      }
    });

    // verify -----------------------------------------------------------
    auto*       ver = app.add_subcommand("verify", "bounded verification");
    std::string ver_kind, ver_map = "phi-p4";
    ver->add_option("kind", ver_kind, "paper, injective or no-kernel")
        ->required()
        ->check(CLI::IsMember({"paper", "injective", "no-kernel"}));
    ver->add_option("map", ver_map, "phi-p4, bs-cube, trefoil-p3, hnn-p4 or identity-p4")
        ->check(CLI::IsMember({"phi-p4", "bs-cube", "trefoil-p3", "hnn-p4", "identity-p4"}));
    ver->add_option("--max-len", max_len, "word length bound");
    ver->callback([&] {
      auto const p3 = make_graph_ref(path_graph(3));
      auto const p4 = make_graph_ref(path_graph(4));
      if (ver_kind == "paper") {
        bool all = true;
        for (auto const& r : regression::run_all(max_len ? max_len : 8)) {
          out << r.to_line() << "\n";
          all = all && r.pass;
        }
        out << "summary=" << (all ? "PASS" : "FAIL") << "\n";
        code = all ? exit_ok : exit_verify;
        return;
      }
      std::size_t const L = max_len ? max_len : 6;
      auto emit = [&](auto const& report, Alphabet const& a) {
        out << report.to_text(a);
        code = report.ok() ? exit_ok : exit_verify;
      };
      if (ver_kind == "injective") {
        if (ver_map == "phi-p4") {
          emit(verify_monoid_injective(phi_p4_map(p4), L), p4->alphabet());
        } else if (ver_map == "bs-cube") {
          emit(verify_monoid_injective(bs_cube_map(p4), L), p4->alphabet());
        } else if (ver_map == "trefoil-p3") {
          emit(verify_monoid_injective(trefoil_p3_map(p3), L), p3->alphabet());
        } else if (ver_map == "hnn-p4") {
          emit(verify_monoid_injective(hnn_p4_map(p4), L), p4->alphabet());
        } else {
          RaagGroup const g{p4};
          std::vector<RaagElement> id;
          for (gen_type i = 0; i < 4; ++i) {
            id.emplace_back(p4, FreeWord{{i, 1}});
          }
          emit(verify_monoid_injective(MonoidMap<RaagGroup>(p4, g, id), L), p4->alphabet());
        }
        return;
      }
      if (ver_map == "trefoil-p3") {
        emit(verify_no_kernel(trefoil_p3_map(p3), L), p3->alphabet());
      } else if (ver_map == "hnn-p4") {
        emit(verify_no_kernel(hnn_p4_map(p4), L), p4->alphabet());
      } else if (ver_map == "bs-cube") {
        emit(verify_no_kernel(bs_cube_map(p4), L), p4->alphabet());
      } else if (ver_map == "identity-p4") {
        RaagGroup const g{p4};
        std::vector<RaagElement> id;
        for (gen_type i = 0; i < 4; ++i) {
          id.emplace_back(p4, FreeWord{{i, 1}});
        }
        emit(verify_no_kernel(MonoidMap<RaagGroup>(p4, g, id), L), p4->alphabet());
      } else {
        throw CLI::ValidationError("map", "no-kernel needs a group-valued map");
      }
    });

    // explore ----------------------------------------------------------
    auto*       exp = app.add_subcommand("explore", "bounded searches");
    std::string exp_kind;
    long long   bound = 1;
    exp->add_option("kind", exp_kind, "prop14")->required()->check(CLI::IsMember({"prop14"}));
    exp->add_option("--bound", bound, "largest |k|, |l|, |m|, |n|")->capture_default_str()->check(CLI::Range(1, 3));
    exp->add_option("--max-len", max_len, "kernel search length");
    exp->callback([&] {
      std::size_t const     L  = max_len ? max_len : 3;
      auto const            p4 = make_graph_ref(path_graph(4));
      HNNTrefoilGroup const g;
      std::vector<long long> range;
      for (long long e = -bound; e <= bound; ++e) {
        if (e != 0) {
          range.push_back(e);
        }
      }
      std::size_t tried = 0, clean = 0;
      for (long long k : range) {
        for (long long l : range) {
          for (long long m : range) {
            for (long long n : range) {
              auto const els = prop14_elements(g, hnn::a(), hnn::b(), hnn::c(), hnn::d(), k, l, m, n);
              ++tried;
              out << "k=" << k << " l=" << l << " m=" << m << " n=" << n;
              try {
                MonoidMap<HNNTrefoilGroup> map(p4, g, {els.begin(), els.end()});
                auto const                 r = verify_no_kernel(map, L);
                clean += r.ok() ? 1 : 0;
                out << " commute=true checked=" << r.checked << " kernel=" << r.kernel.size() << "\n";
              } catch (Error const& e) {
                if (e.code() != ErrorCode::NonCommutingImages) {
                  throw;
                }
                out << " commute=false\n";
              }
            }
          }
        }
      }
      out << "tried=" << tried << " kernel_free=" << clean << " max_len=" << L
          << " (bounded evidence only)\n";
    });

    try {
      app.parse(argc, argv);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n" << "run with --help for usage\n";
      return exit_usage;
    } catch (Error const& e) {
      err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
      return exit_usage;
    }
    return code;
  }

  inline int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    std::vector<char const*> argv{"onerel"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
  }

}  // namespace onerel::cli

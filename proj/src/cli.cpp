#include "qmonoid/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "qmonoid/automata.hpp"
#include "qmonoid/class_dfa.hpp"
#include "qmonoid/conjugacy.hpp"
#include "qmonoid/core.hpp"
#include "qmonoid/oracle.hpp"
#include "qmonoid/recognizability.hpp"

namespace qmonoid {

  namespace {
    struct CliConfig {
      std::string                alphabet = "ab";
      bool                       dot      = false;
      std::optional<std::size_t> oracle_queue_length;
    };

    int predicate(std::ostream& out, bool value, char const* yes, char const* no) {
      out << (value ? yes : no) << '\n';
      return value ? exit_true : exit_false;
    }

    template <typename Automaton>
    void emit(std::ostream& out, Automaton const& a, bool dot) {
      if (dot) {
        write_dot(out, a);
      } else {
        write_text(out, a);
      }
    }

    std::string word_text(Word const& w) {
      auto s = to_string(w);
      return s.empty() ? "e" : s;
    }
  }  // namespace

  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err) {
    CLI::App app{"Queue action monoid toolkit", "qmonoid"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig   cfg;
    std::size_t oracle_len = 0;
    app.add_option("--alphabet", cfg.alphabet, "Base letters (default ab)");
    app.add_flag("--dot", cfg.dot, "Emit automata as Graphviz DOT");
    auto* oracle_opt = app.add_option(
        "--oracle-max-queue", oracle_len, "Queue length bound for --oracle");

    std::string w1, w2, queue, nfa_file, expr_text;
    std::size_t k = 0;
    bool        use_oracle = false, compile = false, trace = false;

    // Each handler runs after parsing, with the alphabet validated.
    std::function<int(Alphabet const&)> handler;
    auto sub = [&](char const* name, char const* help, auto&& fn) {
      auto* cmd = app.add_subcommand(name, help);
      cmd->callback([&handler, fn]() { handler = fn; });
      return cmd;
    };

    auto* nf = sub("nf", "Print the normal form of W", [&](Alphabet const& a) {
      std::vector<RewriteStep> steps;
      auto x = rewrite_normalize(parse_word(w1, a), trace ? &steps : nullptr);
      for (auto const& step : steps) {
        out << word_text(step.result) << '\n';
      }
      out << to_string(x) << '\n';
      return exit_true;
    });
    nf->add_option("W", w1)->required();
    nf->add_flag("--trace", trace, "Print every rewriting step");

    auto* act_cmd = sub("act", "Apply W to queue Q", [&](Alphabet const& a) {
      out << to_string(act(parse_queue(queue, a), parse_word(w1, a))) << '\n';
      return exit_true;
    });
    act_cmd->add_option("Q", queue)->required();
    act_cmd->add_option("W", w1)->required();

    auto* mul_cmd = sub("mul", "Normal form of W1·W2", [&](Alphabet const& a) {
      out << to_string(mul(rewrite_normalize(parse_word(w1, a)),
                           rewrite_normalize(parse_word(w2, a))))
          << '\n';
      return exit_true;
    });
    mul_cmd->add_option("W1", w1)->required();
    mul_cmd->add_option("W2", w2)->required();

    auto* eq = sub("eq", "Decide W1 ≡ W2", [&](Alphabet const& a) {
      Word u = parse_word(w1, a), v = parse_word(w2, a);
      bool same = use_oracle ? equiv_oracle(a, u, v, cfg.oracle_queue_length)
                             : rewrite_normalize(u) == rewrite_normalize(v);
      return predicate(out, same, "equivalent", "inequivalent");
    });
    eq->add_option("W1", w1)->required();
    eq->add_option("W2", w2)->required();
    eq->add_flag("--oracle", use_oracle, "Compare actions on all short queues");

    auto* conj = sub("conj", "Decide whether W1 and W2 are conjugate",
                     [&](Alphabet const& a) {
                       return predicate(out,
                                        conjugate(rewrite_normalize(parse_word(w1, a)),
                                                  rewrite_normalize(parse_word(w2, a))),
                                        "conjugate",
                                        "not-conjugate");
                     });
    conj->add_option("W1", w1)->required();
    conj->add_option("W2", w2)->required();

    auto* witness = sub("conjwitness", "Print z with W1·z = z·W2",
                        [&](Alphabet const& a) {
                          auto z = find_conjugator(a,
                                                   rewrite_normalize(parse_word(w1, a)),
                                                   rewrite_normalize(parse_word(w2, a)));
                          out << (z ? to_string(*z) : "NONE") << '\n';
                          return z ? exit_true : exit_false;
                        });
    witness->add_option("W1", w1)->required();
    witness->add_option("W2", w2)->required();

    auto* conjset = sub("conjset", "Automaton of all conjugators of W1, W2",
                        [&](Alphabet const& a) {
                          auto ca = conjugator_nfa(a,
                                                   rewrite_normalize(parse_word(w1, a)),
                                                   rewrite_normalize(parse_word(w2, a)));
                          emit(out, ca.nfa, cfg.dot);
                          return exit_true;
                        });
    conjset->add_option("W1", w1)->required();
    conjset->add_option("W2", w2)->required();

    auto* classdfa = sub("classdfa", "DFA accepting the class of W",
                         [&](Alphabet const& a) {
                           emit(out, class_dfa(parse_word(w1, a), a), cfg.dot);
                           return exit_true;
                         });
    classdfa->add_option("W", w1)->required();

    auto* member = sub("member", "Is some word of the NFA equivalent to W?",
                       [&](Alphabet const& a) {
                         std::ifstream in(nfa_file);
                         if (!in) {
                           throw ParseError("cannot open " + nfa_file);
                         }
                         Nfa nfa = read_text(in);
                         if (!(nfa.symbols().alphabet() == a)) {
                           throw ParseError("NFA alphabet \""
                                            + nfa.symbols().alphabet().letters()
                                            + "\" differs from --alphabet \""
                                            + a.letters() + "\"");
                         }
                         return predicate(out,
                                          rational_member(parse_word(w1, a), nfa),
                                          "yes",
                                          "no");
                       });
    member->add_option("W", w1)->required();
    member->add_option("--nfa", nfa_file, "NFA description file")->required();

    auto* omega = sub("omega", "Is [W] in Omega_K?", [&](Alphabet const& a) {
      return predicate(out, in_omega(rewrite_normalize(parse_word(w1, a)), k),
                       "in", "out");
    });
    omega->add_option("K", k)->required();
    omega->add_option("W", w1)->required();

    auto* kshuf = sub("kshuffled", "Is W K-shuffled?", [&](Alphabet const& a) {
      return predicate(out, k_shuffled(parse_word(w1, a), k), "yes", "no");
    });
    kshuf->add_option("K", k)->required();
    kshuf->add_option("W", w1)->required();

    auto* embed2 = sub("embed2", "Image of W in the two-letter queue monoid",
                       [&](Alphabet const& a) {
                         out << word_text(embed_q2(parse_word(w1, a), a)) << '\n';
                         return exit_true;
                       });
    embed2->add_option("W", w1)->required();

    auto* simple = sub("simple", "Evaluate or compile a simple-set expression",
                       [&](Alphabet const& a) {
                         auto e = parse_simple(expr_text, a);
                         if (compile) {
                           emit(out, compile_simple(e, a), cfg.dot);
                           return exit_true;
                         }
                         if (w1.empty()) {
                           throw ParseError("simple: give a word W or --compile");
                         }
                         return predicate(out,
                                          eval_simple(e, rewrite_normalize(parse_word(w1, a))),
                                          "yes",
                                          "no");
                       });
    simple->add_option("EXPR", expr_text)->required();
    simple->add_option("W", w1);
    simple->add_flag("--compile", compile, "Emit the compiled DFA");

    auto* ow_cmd = sub("ow", "Overlap width of W", [&](Alphabet const& a) {
      out << ow(parse_word(w1, a)) << '\n';
      return exit_true;
    });
    ow_cmd->add_option("W", w1)->required();

    auto* proj_cmd = sub("proj", "Projections pi and pibar of W",
                         [&](Alphabet const& a) {
                           auto [p, pb] = proj(parse_word(w1, a));
                           out << (p.empty() ? "e" : p) << ' '
                               << (pb.empty() ? "e" : pb) << '\n';
                           return exit_true;
                         });
    proj_cmd->add_option("W", w1)->required();

    auto* dual_cmd = sub("dual", "Dual word of W", [&](Alphabet const& a) {
      out << word_text(dual(parse_word(w1, a))) << '\n';
      return exit_true;
    });
    dual_cmd->add_option("W", w1)->required();

    std::vector<std::string> argv_store{"qmonoid"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char const*> argv;
    for (auto const& s : argv_store) {
      argv.push_back(s.c_str());
    }

    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_true;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    }
    if (oracle_opt->count() > 0) {
      cfg.oracle_queue_length = oracle_len;
    }

    try {
      Alphabet alphabet(cfg.alphabet);
      return handler(alphabet);
    } catch (ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    }
  }

}  // namespace qmonoid

#include "toricheap/cli.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "toricheap/classifier.hpp"
#include "toricheap/errors.hpp"
#include "toricheap/graph_io.hpp"
#include "toricheap/report.hpp"

namespace toricheap::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph;
  std::string format = "json";
  std::string word;
  std::string conjugator;
  std::string u;
  std::string s;
  std::string t;
  std::int64_t x = 2;
  std::int64_t y = 0;
  std::size_t power = 2;
  std::size_t bound = 4;
  std::size_t max_length = 5;
  std::size_t conjugator_length = 3;
  Limits limits;
};

// Output of one leaf command: a JSON result, or DOT text.
struct Output {
  Output(json r) : result(std::move(r)) {}
  static Output text(std::string dot) {
    Output o(json{});
    o.dot = std::move(dot);
    return o;
  }

  json result;
  std::optional<std::string> dot;
};

class Session {
 public:
  Session(Options& opt, std::istream& in) : opt_(opt), in_(in) {}

  const CoxeterGraph& graph() {
    if (!graph_) {
      if (opt_.graph.empty()) throw UsageError("this command needs a Coxeter graph (-g FILE)");
      if (opt_.graph == "-") {
        std::string text((std::istreambuf_iterator<char>(in_)), std::istreambuf_iterator<char>());
        json doc;
        try {
          doc = json::parse(text);
        } catch (const json::exception& e) {
          throw InvalidGraph(std::string("malformed graph on standard input: ") + e.what());
        }
        graph_ = load_coxeter_graph(doc);
      } else {
        graph_ = load_coxeter_graph_file(opt_.graph);
      }
    }
    return *graph_;
  }

  Word word(const std::string& text) {
    std::string src = text;
    if (src == "-") {
      if (!std::getline(in_, src)) src.clear();
    }
    return parse_word(graph(), src);
  }

  bool dot() const { return opt_.format == "dot"; }
  void require_json() const {
    if (dot()) throw UsageError("--format dot is not available for this command");
  }

  json input() const {
    json in = {{"graph", opt_.graph}};
    if (!opt_.word.empty()) in["word"] = opt_.word;
    return in;
  }

  const Limits& limits() const { return opt_.limits; }
  Options& opt() { return opt_; }

 private:
  Options& opt_;
  std::istream& in_;
  std::optional<CoxeterGraph> graph_;
};

json nested_words(const CoxeterGraph& g, const std::vector<std::vector<Word>>& classes) {
  json out = json::array();
  for (const auto& c : classes) out.push_back(words_json(g, c));
  return out;
}

using Handler = std::function<Output(Session&)>;

struct Command {
  std::string path;
  Handler handler;
};

void add_word_arg(CLI::App* sub, Options& opt) {
  sub->add_option("word", opt.word, "Word, e.g. \"s3 s1 s2 s1 s2\" or 31212; - reads a line from stdin")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Cyclic reducibility toolkit for Coxeter groups", "toricheap"};
  app.require_subcommand(1);
  app.add_option("-g,--graph", opt.graph, "Coxeter graph JSON file (- for stdin)");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--max-orbit", opt.limits.max_orbit, "Cap on words visited by braid and rotation closures");
  app.add_option("--max-class", opt.limits.max_class, "Cap on materialized toric class size");
  app.add_option("--max-extensions", opt.limits.max_extensions, "Cap on enumerated linear extensions");

  std::vector<Command> commands;
  std::optional<std::size_t> chosen;

  auto group = [&](const std::string& name, const std::string& help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h) {
    auto* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    commands.push_back({parent->get_name() + " " + name, std::move(h)});
    const std::size_t index = commands.size() - 1;
    sub->final_callback([&chosen, index] { chosen = index; });
    return sub;
  };

  // graph
  auto* graph_cmd = group("graph", "Coxeter graph queries");
  leaf(graph_cmd, "validate", "Load and validate a graph", [](Session& s) {
    s.require_json();
    const auto& g = s.graph();
    return Output{{{"graph", graph_to_json(g)},
                   {"rank", g.rank()},
                   {"bonds", g.bonds().size()},
                   {"finiteType", is_finite_type(g)}}};
  });
  leaf(graph_cmd, "orientations", "Acyclic orientations of the Coxeter graph", [](Session& s) {
    s.require_json();
    const auto& g = s.graph();
    json list = json::array();
    for (const auto& o : all_acyclic_orientations(coxeter_simple_graph(g), s.limits())) {
      list.push_back(orientation_json(o, g.generators()));
    }
    return Output{{{"count", list.size()}, {"orientations", list}}};
  });
  leaf(graph_cmd, "toric-classes", "Toric equivalence classes of acyclic orientations", [](Session& s) {
    s.require_json();
    const auto& g = s.graph();
    json edges = json::array();
    for (const auto& b : g.bonds()) edges.push_back({g.name(b.s), g.name(b.t)});
    json classes = json::array();
    for (const auto& cls : toric_classes(coxeter_simple_graph(g), s.limits())) {
      json members = json::array();
      for (const auto& o : cls) members.push_back(o.bitstring());
      classes.push_back(members);
    }
    return Output{{{"edgeOrder", edges}, {"count", classes.size()}, {"classes", classes}}};
  });
  auto* tutte_cmd = leaf(graph_cmd, "tutte", "Evaluate the Tutte polynomial of the Coxeter graph", [](Session& s) {
    s.require_json();
    const auto& g = s.graph();
    return Output{{{"x", s.opt().x}, {"y", s.opt().y}, {"value", tutte(*coxeter_simple_graph(g), s.opt().x, s.opt().y, s.limits())}}};
  });
  tutte_cmd->add_option("--x", opt.x, "x")->required();
  tutte_cmd->add_option("--y", opt.y, "y")->required();

  // word
  auto* word_cmd = group("word", "Word problem and classification");
  add_word_arg(leaf(word_cmd, "reduce", "Normal form of a word", [](Session& s) {
    s.require_json();
    const auto& g = s.graph();
    const auto nf = normal_form(g, s.word(s.opt().word), s.limits());
    return Output{{{"normalForm", format_word(g, nf.word)}, {"length", nf.length}}};
  }), opt);
  add_word_arg(leaf(word_cmd, "reduced-words", "All reduced words of a reduced word's element", [](Session& s) {
    s.require_json();
    const auto& g = s.graph();
    const auto words = reduced_words(g, s.word(s.opt().word), s.limits());
    return Output{{{"count", words.size()}, {"words", words_json(g, words)}}};
  }), opt);
  add_word_arg(leaf(word_cmd, "comm-classes", "Commutativity classes of the reduced words", [](Session& s) {
    s.require_json();
    const auto& g = s.graph();
    const auto classes = commutativity_classes(g, s.word(s.opt().word), s.limits());
    json sizes = json::array();
    for (const auto& c : classes) sizes.push_back(c.size());
    return Output{{{"count", classes.size()}, {"sizes", sizes}, {"classes", nested_words(g, classes)}}};
  }), opt);
  add_word_arg(leaf(word_cmd, "classify", "FC / CFC / TFC / faux-CFC report", [](Session& s) {
    s.require_json();
    const auto& g = s.graph();
    return Output{report_json(g, classify(g, s.word(s.opt().word), s.limits()))};
  }), opt);
  auto* power_cmd = leaf(word_cmd, "power", "Length of the k-th power", [](Session& s) {
    s.require_json();
    const auto& g = s.graph();
    const std::size_t k = s.opt().power;
    return Output{{{"k", k}, {"length", power_length(g, s.word(s.opt().word), k, s.limits())}}};
  });
  add_word_arg(power_cmd, opt);
  power_cmd->add_option("-k,--k", opt.power, "Exponent");
  auto* conj_cmd = leaf(word_cmd, "conjugate", "Normal form of v^-1 w v", [](Session& s) {
    s.require_json();
    const auto& g = s.graph();
    const Word v = s.word(s.opt().conjugator);
    const auto nf = conjugate(g, v, s.word(s.opt().word), s.limits());
    return Output{{{"conjugator", format_word(g, v)}, {"normalForm", format_word(g, nf.word)}, {"length", nf.length}}};
  });
  conj_cmd->add_option("conjugator", opt.conjugator, "Conjugating word v")->required();
  add_word_arg(conj_cmd, opt);
  auto* log_cmd = leaf(word_cmd, "log-probe", "Check l(w^k) = k l(w) for k up to K", [](Session& s) {
    s.require_json();
    const auto& g = s.graph();
    const auto p = logarithmic_probe(g, s.word(s.opt().word), s.opt().bound, s.limits());
    return Output{{{"bound", p.bound},
                   {"length", p.length},
                   {"powerLengths", p.power_lengths},
                   {"violation", p.violation ? json(*p.violation) : json(nullptr)},
                   {"note", "partial check up to the bound only"}}};
  });
  add_word_arg(log_cmd, opt);
  log_cmd->add_option("-K,--bound", opt.bound, "Largest exponent checked");

  // cyclic
  auto* cyclic_cmd = group("cyclic", "Cyclic words and toric equivalence");
  add_word_arg(leaf(cyclic_cmd, "rtor", "Cyclic words braid-equivalent to [w]", [](Session& s) {
    s.require_json();
    const auto& g = s.graph();
    const auto cls = rtor_cyclic_class(g, s.word(s.opt().word), s.limits());
    return Output{{{"count", cls.size()}, {"cyclicWords", cyclic_words_json(g, cls)}}};
  }), opt);
  add_word_arg(leaf(cyclic_cmd, "ctor", "Cyclic commutativity class of [w]", [](Session& s) {
    s.require_json();
    const auto& g = s.graph();
    const auto cls = ctor_class(g, s.word(s.opt().word), s.limits());
    return Output{{{"count", cls.size()}, {"cyclicWords", cyclic_words_json(g, cls)}}};
  }), opt);
  add_word_arg(leaf(cyclic_cmd, "decompose", "Split R_tor([w]) into cyclic commutativity classes", [](Session& s) {
    s.require_json();
    const auto& g = s.graph();
    json classes = json::array();
    for (const auto& c : cyclic_decomposition(g, s.word(s.opt().word), s.limits())) classes.push_back(cyclic_words_json(g, c));
    return Output{{{"count", classes.size()}, {"classes", classes}}};
  }), opt);
  add_word_arg(leaf(cyclic_cmd, "elements", "Torically equivalent elements and their words", [](Session& s) {
    s.require_json();
    const auto& g = s.graph();
    const Word w = s.word(s.opt().word);
    const auto words = rtor_words(g, w, s.limits());
    const auto elements = torically_equivalent_elements(g, w, s.limits());
    return Output{{{"wordCount", words.size()},
                   {"words", words_json(g, words)},
                   {"elementCount", elements.size()},
                   {"elements", normal_forms_json(g, elements)}}};
  }), opt);

  // heap
  auto* heap_cmd = group("heap", "Heaps of words");
  add_word_arg(leaf(heap_cmd, "build", "Heap poset of a word (positions are 1-based)", [](Session& s) {
    const auto h = heap_of_word(s.graph(), s.word(s.opt().word));
    if (s.dot()) return Output::text(heap_dot(h));
    return Output{heap_json(h)};
  }), opt);
  add_word_arg(leaf(heap_cmd, "linexts", "Labelled linear extensions", [](Session& s) {
    s.require_json();
    const auto& g = s.graph();
    const auto ext = linear_extensions(heap_of_word(g, s.word(s.opt().word)), s.limits());
    return Output{{{"count", ext.size()}, {"words", words_json(g, ext)}}};
  }), opt);
  add_word_arg(leaf(heap_cmd, "dot", "Hasse diagram in DOT", [](Session& s) {
    return Output::text(heap_dot(heap_of_word(s.graph(), s.word(s.opt().word))));
  }), opt);

  // toric
  auto* toric_cmd = group("toric", "Toric heaps");
  add_word_arg(leaf(toric_cmd, "heap", "Toric heap of a word", [](Session& s) {
    const auto& g = s.graph();
    const auto t = toric_heap_of_word(g, s.word(s.opt().word));
    if (s.dot()) return Output::text(toric_dot(t.toric(), g, t.word(), "toric_heap"));
    return Output{toric_heap_json(t, s.limits())};
  }), opt);
  add_word_arg(leaf(toric_cmd, "ltor", "Total toric extensions read as cyclic words", [](Session& s) {
    s.require_json();
    const auto& g = s.graph();
    const auto cls = ltor(toric_heap_of_word(g, s.word(s.opt().word)), s.limits());
    return Output{{{"count", cls.size()}, {"cyclicWords", cyclic_words_json(g, cls)}}};
  }), opt);
  add_word_arg(leaf(toric_cmd, "hasse", "Toric Hasse diagram", [](Session& s) {
    const auto& g = s.graph();
    const auto t = toric_heap_of_word(g, s.word(s.opt().word));
    const auto h = toric_hasse(t.toric(), s.limits());
    if (s.dot()) return Output::text(toric_dot(h, g, t.word(), "toric_hasse"));
    return Output{{{"edgeCount", h.graph().edge_count()}, {"orientation", orientation_json(h.representative())}}};
  }), opt);
  add_word_arg(leaf(toric_cmd, "closure", "Toric transitive closure", [](Session& s) {
    const auto& g = s.graph();
    const auto t = toric_heap_of_word(g, s.word(s.opt().word));
    const auto c = toric_transitive_closure(t.toric());
    if (s.dot()) return Output::text(toric_dot(c, g, t.word(), "toric_closure"));
    return Output{{{"edgeCount", c.graph().edge_count()}, {"orientation", orientation_json(c.representative())}}};
  }), opt);

  // coxeter
  auto* cox_cmd = group("coxeter", "Coxeter elements");
  leaf(cox_cmd, "elements", "Coxeter words and the elements they represent", [](Session& s) {
    s.require_json();
    const auto& g = s.graph();
    const auto words = coxeter_words(g);
    const auto elements = coxeter_elements(g, s.limits());
    return Output{{{"wordCount", words.size()},
                   {"words", words_json(g, words)},
                   {"elementCount", elements.size()},
                   {"elements", normal_forms_json(g, elements)}}};
  });
  leaf(cox_cmd, "conjugacy", "Conjugacy classes of Coxeter elements", [](Session& s) {
    s.require_json();
    const auto& g = s.graph();
    json classes = json::array();
    json sizes = json::array();
    for (const auto& c : coxeter_conjugacy_classes(g, s.limits())) {
      classes.push_back(normal_forms_json(g, c));
      sizes.push_back(c.size());
    }
    return Output{{{"count", classes.size()}, {"sizes", sizes}, {"classes", classes}}};
  });

  // probe
  auto* probe_cmd = group("probe", "Evidence probes for open conjectures and propositions");
  add_word_arg(leaf(probe_cmd, "conjecture", "Shorten <s,t>_m u to <s,t>_{m-2} u and classify", [](Session& s) {
    s.require_json();
    const auto& g = s.graph();
    return Output{conjecture_probe_json(g, conjecture_probe(g, s.word(s.opt().word), s.limits()))};
  }), opt);
  add_word_arg(leaf(probe_cmd, "odd-braid", "Odd long braid factor in some torically reduced word", [](Session& s) {
    s.require_json();
    const auto& g = s.graph();
    return Output{{{"oddBraidFactor", odd_braid_obstruction(g, s.word(s.opt().word), s.limits())}}};
  }), opt);
  auto* tfc_cmd = leaf(probe_cmd, "tfc-construct", "Build <s,t>_m u at an even endpoint", [](Session& s) {
    s.require_json();
    const auto& g = s.graph();
    const auto c = tfc_constructor(g, g.index_of(s.opt().s), g.index_of(s.opt().t), s.word(s.opt().u), s.limits());
    return Output{{{"word", format_word(g, c.word)}, {"tfc", c.tfc}, {"cfc", c.cfc}}};
  });
  tfc_cmd->add_option("--s", opt.s, "Even endpoint")->required();
  tfc_cmd->add_option("--t", opt.t, "Its neighbour")->required();
  tfc_cmd->add_option("u", opt.u, "CFC word avoiding s and t")->required();
  auto* cvmt_cmd = leaf(probe_cmd, "cvmt", "Bounded search for torically reduced conjugates outside [w]", [](Session& s) {
    s.require_json();
    const auto& g = s.graph();
    const auto words = enumerate_reduced_words(g, s.opt().max_length, s.limits());
    return Output{cvmt_probe_json(g, cvmt_probe(g, words, s.opt().conjugator_length, s.limits()))};
  });
  cvmt_cmd->add_option("--max-length", opt.max_length, "Longest corpus word");
  cvmt_cmd->add_option("--conjugator-length", opt.conjugator_length, "Longest conjugator");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }
  if (!chosen) {
    err << "no command given\n";
    return kUsageError;
  }

  Session session(opt, in);
  json doc = {{"schemaVersion", kSchemaVersion}, {"command", commands[*chosen].path}};
  try {
    Output result = commands[*chosen].handler(session);
    if (result.dot) {
      out << *result.dot;
      return kOk;
    }
    doc["input"] = session.input();
    doc["result"] = std::move(result.result);
    out << doc.dump(2) << "\n";
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    doc["input"] = session.input();
    doc["error"] = {{"type", e.name()}, {"message", e.what()}};
    out << doc.dump(2) << "\n";
    err << e.name() << ": " << e.what() << "\n";
    return e.is_resource_limit() ? kResourceLimit : kDomainError;
  }
}

}  // namespace toricheap::cli

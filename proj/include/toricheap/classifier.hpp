#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toricheap/coxeter.hpp"
#include "toricheap/cyclic.hpp"
#include "toricheap/digraph.hpp"
#include "toricheap/limits.hpp"
#include "toricheap/words.hpp"

namespace toricheap {

struct ClassificationCounts {
  std::size_t reduced_words = 0;
  std::size_t commutativity_classes = 0;
  std::size_t cyclic_words = 0;                   // |R_tor([w])|
  std::size_t cyclic_commutativity_classes = 0;   // N in the decomposition
  std::size_t torically_reduced_words = 0;        // linear words of R_tor(w)
  std::size_t elements = 0;                       // |[w]|
};

struct ClassificationWitnesses {
  // Some rotation of the word that is not reduced.
  std::optional<Word> non_reduced_rotation;
  // Rotation and braid steps from the word to one with a repeated letter.
  std::vector<Word> toric_refutation;
  // A reduced word of the element with a rotation that is not reduced or not FC.
  std::optional<Word> cfc_counterexample;
  // A braid-related word outside the word's commutativity class.
  std::optional<Word> second_commutativity_class;
  // A cyclic word in R_tor([w]) outside C_tor([w]).
  std::optional<CyclicWord> second_cyclic_class;
};

struct ClassificationReport {
  Word word;
  bool reduced = false;
  bool cyclically_reduced = false;          // every rotation of the word is reduced
  bool cyclically_reduced_element = false;  // the same for every reduced word of the element
  bool torically_reduced = false;
  bool fc = false;
  bool cfc = false;
  bool tfc = false;
  bool faux_cfc = false;
  bool coxeter_element = false;
  ClassificationCounts counts;
  ClassificationWitnesses witnesses;
};

// Verdicts that need reducedness (fc, cfc, element-level cyclic
// reducedness) are false for non-reduced words.
ClassificationReport classify(const CoxeterGraph& g, const Word& w, const Limits& limits = {});

// One commutativity class. Throws NotReduced.
bool is_fc(const CoxeterGraph& g, const Word& w, const Limits& limits = {});
// Every rotation of every reduced word is reduced and FC. Throws NotReduced.
bool is_cfc(const CoxeterGraph& g, const Word& w, const Limits& limits = {});
// Torically reduced with a single cyclic commutativity class.
bool is_tfc(const CoxeterGraph& g, const Word& w, const Limits& limits = {});
bool is_faux_cfc(const CoxeterGraph& g, const Word& w, const Limits& limits = {});

struct LogarithmicProbe {
  std::size_t bound = 0;  // K
  std::size_t length = 0;
  std::vector<std::size_t> power_lengths;  // l(w^k) for k = 1..last checked
  std::optional<std::size_t> violation;    // least k with l(w^k) < k l(w)
};

// Checks l(w^k) = k l(w) for k = 1..K, stopping at the first violation. A
// clean result says nothing beyond K. Throws NotReduced, PreconditionViolated.
LogarithmicProbe logarithmic_probe(const CoxeterGraph& g, const Word& w, std::size_t K, const Limits& limits = {});

// The Coxeter graph as a simple graph on generator indices.
std::shared_ptr<const SimpleGraph> coxeter_simple_graph(const CoxeterGraph& g);

// Every generator exactly once.
bool is_coxeter_word(const CoxeterGraph& g, const Word& w);

// Orients {s, t} as s -> t iff s precedes t in c. Throws NotACoxeterWord.
AcyclicOrientation coxeter_to_orientation(const CoxeterGraph& g, const Word& c);
// Shortlex-least linear extension. Throws GraphMismatch for a foreign graph.
Word orientation_to_coxeter(const CoxeterGraph& g, const AcyclicOrientation& o);

// All n! Coxeter words, shortlex order. Throws TooLarge for rank above 10.
std::vector<Word> coxeter_words(const CoxeterGraph& g);
// Distinct Coxeter elements as normal forms, one per acyclic orientation.
std::vector<NormalForm> coxeter_elements(const CoxeterGraph& g, const Limits& limits = {});
// Coxeter elements grouped by toric class of their orientations, each class
// sorted and the classes ordered by least member.
std::vector<std::vector<NormalForm>> coxeter_conjugacy_classes(const CoxeterGraph& g, const Limits& limits = {});
// A word v with v^-1 c v = c2, read off a chain of source and sink flips.
// Empty optional when the orientations are not toric equivalent.
std::optional<Word> coxeter_conjugator(const CoxeterGraph& g, const Word& c, const Word& c2, const Limits& limits = {});

// Some torically reduced word of the element contains <s,t>_m as a factor
// with m odd and at least 3. Throws NotToricallyReduced.
bool odd_braid_obstruction(const CoxeterGraph& g, const Word& w, const Limits& limits = {});

struct TfcConstruction {
  Word word;  // <s,t>_m u
  bool tfc = false;
  bool cfc = false;
};

// Builds <s,t>_m u for an even endpoint s with neighbour t. Throws
// PreconditionViolated when s is not an even endpoint next to t, when u uses
// s or t, when u is not CFC, or when the product is not reduced.
TfcConstruction tfc_constructor(const CoxeterGraph& g, Gen s, Gen t, const Word& u, const Limits& limits = {});

enum class Verdict { CFC, FauxCFC, NotTFC };
std::string verdict_name(Verdict v);
Verdict verdict_of(const CoxeterGraph& g, const Word& w, const Limits& limits = {});

// Evidence about an open conjecture on words <s,t>_m u that are faux CFC; the
// report proves nothing.
struct ConjectureProbe {
  Word word;
  std::size_t rotation = 0;  // the shape was found in rotate(word, rotation)
  Gen s = 0;
  Gen t = 0;
  int m = 0;
  Word u;
  bool word_faux_cfc = false;
  bool u_torically_reduced = false;
  bool hypothesis_holds = false;  // both flags above
  Word shortened;                 // <s,t>_{m-2} u
  Verdict shortened_verdict = Verdict::NotTFC;
  bool consistent = true;  // false only for a counterexample
};

// Finds the first rotation starting with <s,t>_m for a finite m >= 3.
// Throws ShapeMismatch when there is none.
ConjectureProbe conjecture_probe(const CoxeterGraph& g, const Word& w, const Limits& limits = {});

struct CvmtCounterexample {
  Word word;
  Word conjugator;
  NormalForm conjugate;
};

// Evidence about the conjecture that torically reduced conjugates differ by
// braids and rotations when the support has only infinite components.
struct CvmtProbe {
  std::size_t elements_checked = 0;
  std::size_t elements_skipped = 0;  // torically reduced but with finite support components
  std::size_t conjugates_examined = 0;
  std::size_t max_conjugator_length = 0;
  std::vector<CvmtCounterexample> counterexamples;
};

// For each torically reduced word with eligible support, conjugates it by
// every element of length at most max_conjugator_length and reports torically
// reduced conjugates missing from [w].
CvmtProbe cvmt_probe(const CoxeterGraph& g, const std::vector<Word>& words, std::size_t max_conjugator_length,
                     const Limits& limits = {});

// Every connected component of the support's induced graph is infinite.
bool has_infinite_support_components(const CoxeterGraph& g, const Word& w);

}  // namespace toricheap

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "support.hpp"
#include "topobim/verifier.hpp"

using namespace topobim;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::function<bool(std::string&)> run;
};

// Every listed check at every n in [0, max_n].
bool checks_pass(const std::vector<std::pair<std::string, int>>& plan, std::string& note) {
  VerifyOptions opts;
  opts.expensive = true;
  std::uint64_t checked = 0;
  for (const auto& [name, max_n] : plan)
    for (int n = 0; n <= max_n; ++n) {
      const VerificationReport r = run_check(name, n, opts);
      checked += r.basis_elements_checked;
      if (!r.passed) {
        note = name + " n=" + std::to_string(n) + ": " + r.detail;
        return false;
      }
    }
  note = std::to_string(checked) + " elements";
  return true;
}

bool enumeration_counts(std::string& note) {
  const std::vector<std::size_t> labelled{1, 1, 4, 29, 355};
  const std::vector<std::size_t> unlabelled{1, 1, 3, 9, 33};
  for (int n = 0; n <= 4; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const std::size_t lib_l = topologies_on(LabelSet::first_n(n)).size();
    const std::size_t lib_u = canonical_classes(n).size();
    const std::size_t ora_l = oracle::all_relations(n).size();
    const std::size_t ora_u = oracle::orbit_count(n);
    if (lib_l != labelled[i] || ora_l != labelled[i] || lib_u != unlabelled[i] || ora_u != unlabelled[i]) {
      note = "n=" + std::to_string(n) + " labelled " + std::to_string(lib_l) + "/" + std::to_string(ora_l) +
             " unlabelled " + std::to_string(lib_u) + "/" + std::to_string(ora_u);
      return false;
    }
  }
  note = "n=0..4 library and oracle agree";
  return true;
}

bool order_round_trip(std::string& note) {
  std::size_t count = 0;
  for (int n = 0; n <= 4; ++n)
    for (const Topology& t : topologies_on(LabelSet::first_n(n))) {
      ++count;
      if (order_from_open_sets(n, open_masks(t)) != t.relation()) {
        note = "round trip differs at n=" + std::to_string(n);
        return false;
      }
      // Independent side: the oracle's family of upper ideals yields the same order.
      if (oracle::order_of(oracle::family_of(testing_support::to_rel(t)), n) != testing_support::to_rel(t)) {
        note = "oracle round trip differs at n=" + std::to_string(n);
        return false;
      }
    }
  note = std::to_string(count) + " topologies";
  return true;
}

bool mutation_soundness(std::string& note) {
  int caught = 0;
  for (const CheckInfo& c : registered_checks()) {
    const VerificationReport r = run_mutation(c);
    if (r.passed) {
      note = c.name + " not caught by " + std::string(fault_name(c.designated_fault));
      return false;
    }
    ++caught;
  }
  note = std::to_string(caught) + " checks caught";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "enumeration counts", 10, enumeration_counts},
      {2, "quasi-order / open-set bijection", 10, order_round_trip},
      {3, "coassociativity", 60,
       [](std::string& n) {
         return checks_pass({{"coassoc_delta_T", 4}, {"coassoc_gamma_T", 4}, {"coassoc_delta_D", 3},
                             {"coassoc_gamma_Dt", 3}},
                            n);
       }},
      {4, "compatibility of the coproducts on T", 60,
       [](std::string& n) { return checks_pass({{"compat_T", 3}}, n); }},
      {5, "comodule axiom and Phi morphism", 300,
       [](std::string& n) { return checks_pass({{"comodule_phi", 3}, {"phi_monoid", 3}}, n); }},
      {6, "cointeraction", 300, [](std::string& n) { return checks_pass({{"cointeraction", 3}}, n); }},
      {7, "star and divtimes associativity, Psi action", 300,
       [](std::string& n) { return checks_pass({{"star_assoc", 3}, {"divtimes_assoc", 3}, {"psi_action", 2}}, n); }},
      {8, "lemma suite", 300,
       [](std::string& n) {
         return checks_pass({{"lemma21_bijection", 3},
                             {"restriction_admissible", 4},
                             {"open_complement_lemma", 4},
                             {"tsplit_lemma", 4}},
                            n);
       }},
      {9, "counit laws and non-counitality", 300,
       [](std::string& n) {
         return checks_pass({{"counit_gamma_T", 4}, {"counit_gamma_Dt", 4}, {"noncounital_D", 3}}, n);
       }},
      {10, "grading additivity", 300, [](std::string& n) { return checks_pass({{"grading_additivity", 4}}, n); }},
      {11, "mutation soundness", 300, mutation_soundness},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    std::string note;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.limit_s) {
      ok = false;
      note += ", over the time limit";
    }
    all = all && ok;
    std::printf("criterion %2d %-45s %s  %.2fs / %.0fs  %s\n", c.id, c.title.c_str(), ok ? "PASS" : "FAIL", secs,
                c.limit_s, note.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}

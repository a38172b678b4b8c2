#pragma once

#include "sgc/open_graph.hpp"
#include "sgc/oracle.hpp"
#include "sgc/signed_state.hpp"

#include <map>
#include <vector>

namespace sgc {

// Pending Pauli correction X^x Z^z per qubit, recorded instead of applied.
class PauliFrame {
public:
    void toggle_x(Vertex v) { entry(v).first ^= true; prune(v); }
    void toggle_z(Vertex v) { entry(v).second ^= true; prune(v); }
    std::pair<bool, bool> get(Vertex v) const {
        auto it = pending_.find(v);
        return it == pending_.end() ? std::pair<bool, bool>{false, false} : it->second;
    }
    void clear(Vertex v) { pending_.erase(v); }
    const std::map<Vertex, std::pair<bool, bool>>& items() const { return pending_; }
    bool operator==(const PauliFrame&) const = default;

private:
    std::pair<bool, bool>& entry(Vertex v) { return pending_[v]; }
    void prune(Vertex v) {
        auto it = pending_.find(v);
        if (it != pending_.end() && !it->second.first && !it->second.second) pending_.erase(it);
    }
    std::map<Vertex, std::pair<bool, bool>> pending_;
};

// When the measurement of `vertex` reports logical outcome 1, toggle the
// listed corrections on `target`.
struct ByproductRule {
    Vertex target;
    bool x = false;
    bool z = false;
    bool operator==(const ByproductRule&) const = default;
};

struct PlanEntry {
    Vertex vertex;
    double angle;  // cos(angle) Z + sin(angle) X observable
    std::vector<ByproductRule> byproducts;
};

struct Pattern {
    OpenGraph og;
    std::vector<PlanEntry> plan;  // measured in listed order
};

// Glues b after a, identifying each input of b with an output of a via
// iface (b input label -> a output label). Vertices of a keep their labels;
// the non-input vertices of b get fresh labels in ascending label order.
// Coinciding edges cancel (symmetric difference). If b_label_map is given
// it receives the combined label of every b vertex.
Pattern compose(const Pattern& a, const Pattern& b, const std::map<Vertex, Vertex>& iface,
                std::vector<Vertex>* b_label_map = nullptr);

// Disjoint union; labels of b are shifted past a.
Pattern tensor_pattern(const Pattern& a, const Pattern& b);

// Path on n vertices, input 0, output n-1, every interior measurement at
// angle pi/2. Implements a wire (identity for even edge count, H for odd).
Pattern wire_pattern(Vertex n);

// Single edge, both endpoints in both boundaries, nothing measured.
Pattern cz_pattern();

// Triangle 0-1-2 with input 0 and output 2; measuring 0 at pi/2 and then 1
// at alpha - pi/2 implements cos(alpha/2) X + sin(alpha/2) Z up to the
// recorded byproducts.
Pattern rotation_pattern(double alpha);

// Angle and outcome relabeling induced by the pending correction on u:
// pending Z negates the angle, pending X reflects it through pi, and both
// together also swap the outcome labels.
struct AdaptedAngle {
    double angle;
    int outcome_flip;
};
AdaptedAngle adapt_angle(const PauliFrame& frame, Vertex u, double alpha);

struct TranscriptEntry {
    Vertex vertex;
    double adapted_angle;
    int outcome;  // physical outcome as measured
};

struct SimulationResult {
    StateVector output;   // labels = outputs, ascending
    PauliFrame frame;     // corrections still pending on the outputs
    std::vector<TranscriptEntry> transcript;
};

// Entangles psi_in (labels = inputs, ascending) through the open graph and
// runs the plan, adapting each angle against the frame and recording
// byproducts instead of applying them. A zero-probability branch means the
// byproduct bookkeeping is wrong and throws.
SimulationResult simulate_pattern(const Pattern& p, const StateVector& psi_in,
                                  OutcomeSource& outcomes);

// Applies the pending corrections (X^a Z^b per qubit) to the state.
StateVector apply_frame(const StateVector& sv, const PauliFrame& frame);

} // namespace sgc

#include "tricobracket/eval.hpp"

#include <algorithm>
#include <vector>

namespace tricob {

namespace {

struct ArrowData {
    int label;
    int sign;
    int overComp, overIdx;    // component and global index of the over endpoint
    int underComp, underIdx;
};

std::vector<ArrowData> arrow_data(const Diagram& d) {
    std::vector<ArrowData> out;
    out.reserve(d.arrows().size());
    for (auto& [label, a] : d.arrows()) {
        EndpointRef over = d.slot(a.first).over == 1 ? a.first : a.second;
        EndpointRef under = d.slot(a.first).over == 1 ? a.second : a.first;
        out.push_back({label, a.sign, over.comp, d.globalIndex(over), under.comp,
                       d.globalIndex(under)});
    }
    return out;
}

void check_shape(const Pattern& p, const Diagram& d) {
    if (d.kind() != Kind::Knotted) {
        throw ShapeError("pattern evaluation needs a knotted diagram (apply iota first)");
    }
    if (p.componentCount != static_cast<int>(d.components().size())) {
        throw ShapeError("pattern " + p.name + " wants " +
                         std::to_string(p.componentCount) + " components, diagram has " +
                         std::to_string(d.components().size()));
    }
}

// Full match check for one term under a complete assignment.
bool assignment_matches(const PatternTerm& term, const std::vector<ArrowData>& arrows,
                        const int* chosen) {
    for (int comp = 0; comp < static_cast<int>(term.words.size()); ++comp) {
        int prev = -1;
        for (const PatternToken& tok : term.words[comp]) {
            const ArrowData& a = arrows[chosen[tok.arrow]];
            int c = tok.head ? a.underComp : a.overComp;
            int g = tok.head ? a.underIdx : a.overIdx;
            if (c != comp || g <= prev) return false;
            if (tok.signConstraint != 0 && a.sign != tok.signConstraint) return false;
            prev = g;
        }
    }
    return true;
}

long long term_products(const PatternTerm& term, const std::vector<ArrowData>& arrows,
                        const int* chosen) {
    long long prod = term.coeff;
    for (int k = 0; k < term.arrowCount; ++k) prod *= arrows[chosen[k]].sign;
    return prod;
}

// Counts matches of one term with arrow slot 0 pinned to `first`.
long long count_from(const PatternTerm& term, const std::vector<ArrowData>& arrows,
                     int first) {
    int n = static_cast<int>(arrows.size());
    int k = term.arrowCount;
    std::vector<int> chosen(k);
    chosen[0] = first;
    long long total = 0;
    // odometerless recursion over the remaining slots
    std::vector<int> stack(k, 0);
    int depth = 1;
    stack[1] = 0;
    if (k == 1) {
        return assignment_matches(term, arrows, chosen.data())
                   ? term_products(term, arrows, chosen.data())
                   : 0;
    }
    while (depth >= 1) {
        if (stack[depth] >= n) {
            --depth;
            if (depth >= 1) ++stack[depth];
            continue;
        }
        int cand = stack[depth];
        bool used = false;
        for (int q = 0; q < depth; ++q) used = used || chosen[q] == cand;
        if (used) {
            ++stack[depth];
            continue;
        }
        chosen[depth] = cand;
        if (depth + 1 == k) {
            if (assignment_matches(term, arrows, chosen.data())) {
                total += term_products(term, arrows, chosen.data());
            }
            ++stack[depth];
        } else {
            ++depth;
            stack[depth] = 0;
        }
    }
    return total;
}

}  // namespace

long long evaluate(const Pattern& p, const Diagram& d) {
    check_shape(p, d);
    std::vector<ArrowData> arrows = arrow_data(d);
    int n = static_cast<int>(arrows.size());
    // flatten (term, first arrow) into one task list for the parallel loop
    struct Task {
        const PatternTerm* term;
        int first;
    };
    std::vector<Task> tasks;
    for (const PatternTerm& t : p.terms) {
        if (t.arrowCount > n) continue;
        for (int f = 0; f < n; ++f) tasks.push_back({&t, f});
    }
    long long total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
    for (int i = 0; i < static_cast<int>(tasks.size()); ++i) {
        total += count_from(*tasks[i].term, arrows, tasks[i].first);
    }
    return total;
}

long long brute_force_evaluate(const Pattern& p, const Diagram& d) {
    check_shape(p, d);
    std::vector<ArrowData> arrows = arrow_data(d);
    int n = static_cast<int>(arrows.size());
    long long total = 0;
    for (const PatternTerm& term : p.terms) {
        int k = term.arrowCount;
        if (k > n) continue;
        // plain odometer over all ordered tuples, including repeats, which
        // are rejected explicitly
        std::vector<int> tup(k, 0);
        while (true) {
            bool distinct = true;
            for (int i = 0; i < k && distinct; ++i) {
                for (int j = i + 1; j < k; ++j) {
                    if (tup[i] == tup[j]) {
                        distinct = false;
                        break;
                    }
                }
            }
            if (distinct) {
                // gather every matched endpoint with its required position
                bool ok = true;
                long long prod = term.coeff;
                for (int comp = 0; comp < static_cast<int>(term.words.size()) && ok;
                     ++comp) {
                    std::vector<int> positions;
                    for (const PatternToken& tok : term.words[comp]) {
                        const ArrowData& a = arrows[tup[tok.arrow]];
                        int c = tok.head ? a.underComp : a.overComp;
                        if (c != comp) {
                            ok = false;
                            break;
                        }
                        if (tok.signConstraint != 0 && a.sign != tok.signConstraint) {
                            ok = false;
                            break;
                        }
                        positions.push_back(tok.head ? a.underIdx : a.overIdx);
                    }
                    if (!ok) break;
                    for (size_t i = 1; i < positions.size(); ++i) {
                        if (positions[i - 1] >= positions[i]) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (ok) {
                    for (int i = 0; i < k; ++i) prod *= arrows[tup[i]].sign;
                    total += prod;
                }
            }
            int pos = k - 1;
            while (pos >= 0 && ++tup[pos] == n) {
                tup[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return total;
}

}  // namespace tricob

#include "ldgmsm/peg.hpp"

#include "ldgmsm/rng.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ldgmsm {

namespace {

constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);

} // namespace

DegreeSequence::DegreeSequence(std::vector<int> values) : values_(std::move(values)) {
    for (int v : values_)
        if (v < 0)
            throw std::invalid_argument("degree sequence entries must be nonnegative");
    std::sort(values_.begin(), values_.end());
}

DegreeSequence DegreeSequence::uniform(std::size_t count, int degree) {
    return DegreeSequence(std::vector<int>(count, degree));
}

int Protograph::col_sum(std::size_t j) const {
    int s = 0;
    for (std::size_t i = 0; i < n_checks; ++i)
        s += b[i][j];
    return s;
}

int Protograph::row_sum(std::size_t i) const {
    return std::accumulate(b[i].begin(), b[i].end(), 0);
}

std::vector<int> Protograph::col_sums() const {
    std::vector<int> s(n_symbols);
    for (std::size_t j = 0; j < n_symbols; ++j)
        s[j] = col_sum(j);
    return s;
}

std::vector<int> Protograph::row_sums() const {
    std::vector<int> s(n_checks);
    for (std::size_t i = 0; i < n_checks; ++i)
        s[i] = row_sum(i);
    return s;
}

namespace {

// BFS distances from symbol `root` to every check node in the bipartite
// multigraph given by b (multiplicity does not affect reachability).
std::vector<std::size_t> check_distances(const Protograph& p, std::size_t root) {
    std::vector<std::size_t> check_dist(p.n_checks, kUnreached);
    std::vector<std::size_t> symbol_dist(p.n_symbols, kUnreached);
    symbol_dist[root] = 0;
    std::deque<std::pair<bool, std::size_t>> queue{{false, root}}; // (is_check, index)
    while (!queue.empty()) {
        auto [is_check, v] = queue.front();
        queue.pop_front();
        if (is_check) {
            for (std::size_t j = 0; j < p.n_symbols; ++j) {
                if (p.b[v][j] > 0 && symbol_dist[j] == kUnreached) {
                    symbol_dist[j] = check_dist[v] + 1;
                    queue.emplace_back(false, j);
                }
            }
        } else {
            for (std::size_t i = 0; i < p.n_checks; ++i) {
                if (p.b[i][v] > 0 && check_dist[i] == kUnreached) {
                    check_dist[i] = symbol_dist[v] + 1;
                    queue.emplace_back(true, i);
                }
            }
        }
    }
    return check_dist;
}

std::size_t pick_check(const Protograph& p, const std::vector<std::size_t>& candidates, Rng& rng) {
    int best_degree = std::numeric_limits<int>::max();
    std::vector<std::size_t> pool;
    for (auto c : candidates) {
        const int deg = p.row_sum(c);
        if (deg < best_degree) {
            best_degree = deg;
            pool.clear();
        }
        if (deg == best_degree)
            pool.push_back(c);
    }
    return pool[rng.below(pool.size())];
}

} // namespace

Protograph peg_protograph(std::size_t n_checks, std::size_t n_symbols, const DegreeSequence& degrees,
                          std::uint64_t seed, int max_multiplicity) {
    if (n_checks == 0 || n_symbols == 0)
        throw std::invalid_argument("peg_protograph: empty graph");
    if (degrees.size() != n_symbols)
        throw std::invalid_argument("peg_protograph: degree sequence length must equal the symbol count");
    if (max_multiplicity < 1)
        throw std::invalid_argument("peg_protograph: multiplicity cap must be >= 1");
    for (std::size_t j = 0; j < n_symbols; ++j) {
        if (static_cast<long long>(degrees[j]) >
            static_cast<long long>(n_checks) * max_multiplicity)
            throw std::invalid_argument("peg_protograph: infeasible degree sequence");
    }

    Protograph p(n_checks, n_symbols);
    Rng rng(seed);
    for (std::size_t j = 0; j < n_symbols; ++j) {
        for (int e = 0; e < degrees[j]; ++e) {
            const auto dist = check_distances(p, j);
            std::vector<std::size_t> candidates;
            // checks the current tree cannot reach
            for (std::size_t i = 0; i < n_checks; ++i)
                if (dist[i] == kUnreached && p.b[i][j] < max_multiplicity)
                    candidates.push_back(i);
            if (candidates.empty()) {
                // all reachable: take the maximal-distance ones; adjacent
                // checks sit at distance 1, so multi-edges only happen once
                // every admissible check is already a neighbor
                std::size_t dmax = 0;
                for (std::size_t i = 0; i < n_checks; ++i) {
                    if (p.b[i][j] >= max_multiplicity)
                        continue;
                    if (dist[i] > dmax) {
                        dmax = dist[i];
                        candidates.clear();
                    }
                    if (dist[i] == dmax)
                        candidates.push_back(i);
                }
            }
            if (candidates.empty())
                throw std::invalid_argument("peg_protograph: infeasible degree sequence");
            const std::size_t chosen = pick_check(p, candidates, rng);
            p.b[chosen][j] += 1;
        }
    }
    return p;
}

BitMatrix circulant(std::size_t n, std::size_t r) {
    if (r >= n)
        throw std::invalid_argument("circulant: shift must lie in [0, N)");
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, (i + r) % n, true);
    return m;
}

BitMatrix QcLift::expand() const {
    const std::size_t n = lift_factor;
    BitMatrix m(proto.n_checks * n, proto.n_symbols * n);
    for (std::size_t i = 0; i < proto.n_checks; ++i)
        for (std::size_t j = 0; j < proto.n_symbols; ++j)
            for (int r : shifts[i][j])
                for (std::size_t a = 0; a < n; ++a)
                    m.set(i * n + a, j * n + (a + r) % n, true);
    return m;
}

QcLift make_qc_lift(Protograph proto, std::size_t lift_factor,
                    std::vector<std::vector<std::vector<int>>> shifts) {
    if (lift_factor == 0)
        throw std::invalid_argument("lift factor must be positive");
    if (shifts.size() != proto.n_checks)
        throw std::invalid_argument("shift table shape mismatch");
    for (std::size_t i = 0; i < proto.n_checks; ++i) {
        if (shifts[i].size() != proto.n_symbols)
            throw std::invalid_argument("shift table shape mismatch");
        for (std::size_t j = 0; j < proto.n_symbols; ++j) {
            auto& s = shifts[i][j];
            if (static_cast<int>(s.size()) != proto.b[i][j])
                throw std::invalid_argument("entry weight must match the shift count");
            for (int r : s)
                if (r < 0 || static_cast<std::size_t>(r) >= lift_factor)
                    throw std::invalid_argument("shift out of range");
            std::sort(s.begin(), s.end(), std::greater<int>());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw std::invalid_argument("duplicate shift within an entry");
        }
    }
    return QcLift{std::move(proto), lift_factor, std::move(shifts)};
}

namespace {

// Lifted Tanner graph under construction: adjacency lists over
// n_checks*N check nodes and n_symbols*N symbol nodes.
struct LiftedGraph {
    std::size_t n;
    std::vector<std::vector<std::size_t>> check_adj;  // check node -> symbol nodes
    std::vector<std::vector<std::size_t>> symbol_adj; // symbol node -> check nodes

    LiftedGraph(std::size_t nc, std::size_t nv, std::size_t n_)
        : n(n_), check_adj(nc * n_), symbol_adj(nv * n_) {}

    void add_circulant(std::size_t i, std::size_t j, int r) {
        for (std::size_t a = 0; a < n; ++a) {
            const std::size_t c = i * n + a;
            const std::size_t s = j * n + (a + static_cast<std::size_t>(r)) % n;
            check_adj[c].push_back(s);
            symbol_adj[s].push_back(c);
        }
    }

    // Shortest path length from check node c0 to symbol node s0, or
    // kUnreached. Path lengths are odd; adding the candidate edge closes
    // a cycle of that length + 1.
    std::size_t check_to_symbol_distance(std::size_t c0, std::size_t s0) const {
        std::vector<std::size_t> cd(check_adj.size(), kUnreached);
        std::vector<std::size_t> sd(symbol_adj.size(), kUnreached);
        cd[c0] = 0;
        std::deque<std::pair<bool, std::size_t>> queue{{true, c0}};
        while (!queue.empty()) {
            auto [is_check, v] = queue.front();
            queue.pop_front();
            if (is_check) {
                for (auto s : check_adj[v]) {
                    if (sd[s] == kUnreached) {
                        sd[s] = cd[v] + 1;
                        if (s == s0)
                            return sd[s];
                        queue.emplace_back(false, s);
                    }
                }
            } else {
                for (auto c : symbol_adj[v]) {
                    if (cd[c] == kUnreached) {
                        cd[c] = sd[v] + 1;
                        queue.emplace_back(true, c);
                    }
                }
            }
        }
        return kUnreached;
    }
};

} // namespace

QcLift qc_peg_shifts(const Protograph& proto, std::size_t lift_factor, std::uint64_t seed) {
    if (lift_factor == 0)
        throw std::invalid_argument("qc_peg_shifts: lift factor must be positive");
    for (std::size_t i = 0; i < proto.n_checks; ++i)
        for (std::size_t j = 0; j < proto.n_symbols; ++j)
            if (static_cast<std::size_t>(proto.b[i][j]) > lift_factor)
                throw std::invalid_argument("qc_peg_shifts: entry weight exceeds the lift factor");

    Rng rng(seed);
    LiftedGraph graph(proto.n_checks, proto.n_symbols, lift_factor);
    std::vector shifts(proto.n_checks, std::vector(proto.n_symbols, std::vector<int>{}));

    for (std::size_t j = 0; j < proto.n_symbols; ++j) {
        for (std::size_t i = 0; i < proto.n_checks; ++i) {
            for (int t = 0; t < proto.b[i][j]; ++t) {
                // score each unused shift by the shortest cycle the new
                // circulant would close; all copies are equivalent under
                // the cyclic symmetry, so one representative edge suffices
                std::size_t best_cycle = 0;
                std::vector<int> pool;
                for (std::size_t r = 0; r < lift_factor; ++r) {
                    if (std::find(shifts[i][j].begin(), shifts[i][j].end(), static_cast<int>(r)) !=
                        shifts[i][j].end())
                        continue;
                    const std::size_t dist =
                        graph.check_to_symbol_distance(i * lift_factor, j * lift_factor + r);
                    const std::size_t cycle = dist == kUnreached ? kUnreached : dist + 1;
                    if (cycle > best_cycle) {
                        best_cycle = cycle;
                        pool.clear();
                    }
                    if (cycle == best_cycle)
                        pool.push_back(static_cast<int>(r));
                }
                const int chosen = pool[rng.below(pool.size())];
                shifts[i][j].push_back(chosen);
                graph.add_circulant(i, j, chosen);
            }
        }
    }
    return make_qc_lift(proto, lift_factor, std::move(shifts));
}

namespace {

std::string strip_ws(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out += c;
    return out;
}

int parse_term(const std::string& term, std::size_t lift_factor) {
    if (term == "1")
        return 0;
    if (term == "x")
        return 1;
    if (term.size() >= 3 && term[0] == 'x' && term[1] == '^') {
        const std::string digits = term.substr(2);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            }))
            throw std::invalid_argument("malformed polynomial term: " + term);
        const long v = std::stol(digits);
        if (v < 0 || static_cast<std::size_t>(v) >= lift_factor)
            throw std::invalid_argument("shift exceeds the lift factor in term: " + term);
        return static_cast<int>(v);
    }
    throw std::invalid_argument("malformed polynomial term: " + term);
}

std::vector<int> parse_entry(const std::string& entry, std::size_t lift_factor) {
    if (entry.empty())
        throw std::invalid_argument("empty polynomial entry");
    if (entry == "0")
        return {};
    std::vector<int> shifts;
    std::size_t pos = 0;
    while (pos <= entry.size()) {
        const std::size_t plus = entry.find('+', pos);
        const std::string term =
            entry.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
        shifts.push_back(parse_term(term, lift_factor));
        if (plus == std::string::npos)
            break;
        pos = plus + 1;
    }
    return shifts;
}

} // namespace

QcLift parse_poly_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lift_factor = 0;
    bool have_header = false;
    std::vector<std::vector<std::vector<int>>> rows;

    while (std::getline(in, line)) {
        const std::string s = strip_ws(line);
        if (s.empty())
            continue;
        if (!have_header) {
            if (s.rfind("N=", 0) != 0)
                throw std::invalid_argument("polynomial matrix must start with an N=<int> header");
            const long v = std::stol(s.substr(2));
            if (v < 1)
                throw std::invalid_argument("lift factor must be positive");
            lift_factor = static_cast<std::size_t>(v);
            have_header = true;
            continue;
        }
        std::vector<std::vector<int>> row;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            const std::size_t sep = s.find(';', pos);
            const std::string entry =
                s.substr(pos, sep == std::string::npos ? std::string::npos : sep - pos);
            row.push_back(parse_entry(entry, lift_factor));
            if (sep == std::string::npos)
                break;
            pos = sep + 1;
        }
        rows.push_back(std::move(row));
    }
    if (!have_header || rows.empty())
        throw std::invalid_argument("polynomial matrix needs a header and at least one row");

    const std::size_t nv = rows[0].size();
    Protograph proto(rows.size(), nv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nv)
            throw std::invalid_argument("ragged polynomial matrix");
        for (std::size_t j = 0; j < nv; ++j)
            proto.b[i][j] = static_cast<int>(rows[i][j].size());
    }
    return make_qc_lift(std::move(proto), lift_factor, std::move(rows));
}

std::string format_poly_matrix(const QcLift& lift) {
    std::ostringstream out;
    out << "N=" << lift.lift_factor << '\n';
    for (std::size_t i = 0; i < lift.proto.n_checks; ++i) {
        for (std::size_t j = 0; j < lift.proto.n_symbols; ++j) {
            if (j)
                out << ';';
            const auto& s = lift.shifts[i][j];
            if (s.empty()) {
                out << '0';
                continue;
            }
            for (std::size_t t = 0; t < s.size(); ++t) {
                if (t)
                    out << '+';
                if (s[t] == 0)
                    out << '1';
                else if (s[t] == 1)
                    out << 'x';
                else
                    out << "x^" << s[t];
            }
        }
        out << '\n';
    }
    return out.str();
}

std::size_t tanner_girth(const BitMatrix& m) {
    // BFS from every check node, tracking the parent edge; the shortest
    // cycle through a node shows up as a cross edge.
    const std::size_t nc = m.rows(), nv = m.cols();
    std::size_t best = 0;
    std::vector<std::size_t> cd(nc), sd(nv);
    for (std::size_t root = 0; root < nc; ++root) {
        std::fill(cd.begin(), cd.end(), kUnreached);
        std::fill(sd.begin(), sd.end(), kUnreached);
        std::vector<std::size_t> cparent(nc, kUnreached), sparent(nv, kUnreached);
        cd[root] = 0;
        std::deque<std::pair<bool, std::size_t>> queue{{true, root}};
        while (!queue.empty()) {
            auto [is_check, v] = queue.front();
            queue.pop_front();
            if (is_check) {
                for (std::size_t s = 0; s < nv; ++s) {
                    if (!m.get(v, s) || s == cparent[v])
                        continue;
                    if (sd[s] == kUnreached) {
                        sd[s] = cd[v] + 1;
                        sparent[s] = v;
                        queue.emplace_back(false, s);
                    } else {
                        const std::size_t cycle = cd[v] + sd[s] + 1;
                        if (best == 0 || cycle < best)
                            best = cycle;
                    }
                }
            } else {
                for (std::size_t c = 0; c < nc; ++c) {
                    if (!m.get(c, v) || c == sparent[v])
                        continue;
                    if (cd[c] == kUnreached) {
                        cd[c] = sd[v] + 1;
                        cparent[c] = v;
                        queue.emplace_back(true, c);
                    } else {
                        const std::size_t cycle = sd[v] + cd[c] + 1;
                        if (best == 0 || cycle < best)
                            best = cycle;
                    }
                }
            }
        }
    }
    return best;
}

} // namespace ldgmsm

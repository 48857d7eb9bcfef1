#include "graphsep/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace graphsep {

Graph::Graph(int n) : n_(n), adj_(n, 0) {
  if (n < 1 || n > kMaxQubits) throw std::invalid_argument("qubit count out of range");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [i, j] : edges) {
    if (i == j) throw std::invalid_argument("self loop");
    toggle_edge(i, j);
  }
}

bool Graph::has_edge(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("vertex index");
  return (adj_[i - 1] >> (j - 1)) & 1u;
}

void Graph::toggle_edge(int i, int j) {
  if (i < 1 || i > n_ || j < 1 || j > n_ || i == j) throw std::out_of_range("vertex index");
  adj_[i - 1] ^= 1u << (j - 1);
  adj_[j - 1] ^= 1u << (i - 1);
}

int Graph::degree(int i) const { return std::popcount(neighbourhood(i)); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if ((adj_[i - 1] >> (j - 1)) & 1u) out.emplace_back(i, j);
  return out;
}

std::uint64_t Graph::encode() const {
  std::uint64_t code = static_cast<std::uint64_t>(n_);
  int bit = 4;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j, ++bit)
      if ((adj_[i - 1] >> (j - 1)) & 1u) code |= 1ull << bit;
  return code;
}

bool Graph::is_connected() const {
  std::uint32_t seen = 1u;
  std::deque<int> work{0};
  while (!work.empty()) {
    int v = work.front();
    work.pop_front();
    std::uint32_t fresh = adj_[v] & ~seen;
    seen |= fresh;
    while (fresh) {
      int w = std::countr_zero(fresh);
      fresh &= fresh - 1;
      work.push_back(w);
    }
  }
  return seen == (1u << n_) - 1u;
}

bool Graph::is_star(int* center) const {
  if (n_ < 2) return false;
  int c = -1;
  for (int i = 1; i <= n_; ++i) {
    int d = degree(i);
    if (d == n_ - 1) {
      if (c != -1 && n_ > 2) return false;
      if (c == -1) c = i;
    } else if (d != 1) {
      return false;
    }
  }
  if (c == -1) return false;
  if (center) *center = c;
  return true;
}

Bipartition::Bipartition(int n_qubits, std::uint32_t m) : n(n_qubits), mask(m) {
  std::uint32_t full = (1u << n) - 1u;
  if ((m & ~full) != 0) throw std::invalid_argument("bipartition mask out of range");
  int pc = std::popcount(m);
  if (pc < 1 || pc > n - 1) throw std::invalid_argument("bipartition side empty");
}

Bipartition::Bipartition(int n_qubits, const std::vector<int>& side) : n(n_qubits) {
  for (int q : side) {
    if (q < 1 || q > n) throw std::invalid_argument("bipartition qubit out of range");
    mask |= 1u << (q - 1);
  }
  *this = Bipartition(n, mask);
}

Bipartition Bipartition::canonical() const {
  std::uint32_t full = (1u << n) - 1u;
  return (mask & 1u) ? Bipartition(n, full & ~mask) : *this;
}

int Bipartition::side_size() const { return std::popcount(mask); }

std::vector<int> Bipartition::side_qubits() const {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string Bipartition::str() const {
  std::string a, b;
  for (int i = 1; i <= n; ++i) ((contains(i)) ? a : b) += static_cast<char>('A' + i - 1);
  // Render the side containing qubit A first, e.g. "AD|BC".
  return contains(1) ? a + "|" + b : b + "|" + a;
}

std::vector<Bipartition> all_bipartitions(int n) {
  std::vector<Bipartition> out;
  // canonical side excludes qubit 1, so enumerate masks over bits 1..n-1
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    if (m & 1u) continue;
    out.emplace_back(n, m);
  }
  return out;
}

PauliString stabilizer_generator(const Graph& g, int i) {
  if (i < 1 || i > g.num_qubits()) throw std::out_of_range("generator index");
  return PauliString{g.num_qubits(), 1u << (i - 1), g.neighbourhood(i), 0};
}

PauliString group_element(const Graph& g, std::uint32_t subset) {
  PauliString p = pauli_identity(g.num_qubits());
  for (int i = 1; i <= g.num_qubits(); ++i)
    if ((subset >> (i - 1)) & 1u) p = pauli_multiply(p, stabilizer_generator(g, i));
  return p;
}

Graph local_complement(const Graph& g, int a) {
  if (a < 1 || a > g.num_qubits()) throw std::out_of_range("vertex index");
  Graph out = g;
  std::uint32_t nb = g.neighbourhood(a);
  for (int i = 1; i <= g.num_qubits(); ++i) {
    if (!((nb >> (i - 1)) & 1u)) continue;
    for (int j = i + 1; j <= g.num_qubits(); ++j)
      if ((nb >> (j - 1)) & 1u) out.toggle_edge(i, j);
  }
  return out;
}

BasisLabel label_transform_lc(const Graph& g, int a, BasisLabel label) {
  if (a < 1 || a > g.num_qubits()) throw std::out_of_range("vertex index");
  if ((label >> (a - 1)) & 1u) return label ^ g.neighbourhood(a);
  return label;
}

int cut_rank(const Graph& g, const Bipartition& m) {
  if (m.n != g.num_qubits()) throw std::invalid_argument("bipartition size mismatch");
  // GF(2) rank of the rows(M) x cols(~M) adjacency block.
  std::uint32_t cols = ((1u << g.num_qubits()) - 1u) & ~m.mask;
  std::vector<std::uint32_t> rows;
  for (int i = 1; i <= g.num_qubits(); ++i)
    if (m.contains(i)) rows.push_back(g.neighbourhood(i) & cols);
  int rank = 0;
  for (std::uint32_t pivot_col = 1; pivot_col; pivot_col <<= 1) {
    if (!(pivot_col & cols)) continue;
    auto it = std::find_if(rows.begin() + rank, rows.end(),
                           [&](std::uint32_t r) { return r & pivot_col; });
    if (it == rows.end()) continue;
    std::swap(*it, rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != static_cast<std::size_t>(rank) && (rows[r] & pivot_col)) rows[r] ^= rows[rank];
    ++rank;
    if (rank == static_cast<int>(rows.size())) break;
  }
  return rank;
}

std::vector<Graph> lc_orbit(const Graph& g) {
  if (g.num_qubits() > 6) throw std::invalid_argument("lc_orbit: n > 6");
  std::set<std::uint64_t> seen{g.encode()};
  std::vector<Graph> orbit{g};
  std::deque<Graph> work{g};
  while (!work.empty()) {
    Graph cur = work.front();
    work.pop_front();
    for (int a = 1; a <= g.num_qubits(); ++a) {
      Graph next = local_complement(cur, a);
      if (seen.insert(next.encode()).second) {
        orbit.push_back(next);
        work.push_back(next);
      }
    }
  }
  return orbit;
}

bool lc_sequence_to(const Graph& g, const Graph& target, std::vector<int>& sequence) {
  if (g.num_qubits() != target.num_qubits()) return false;
  std::map<std::uint64_t, std::pair<std::uint64_t, int>> parent;  // code -> (prev code, vertex)
  std::map<std::uint64_t, Graph> graphs;
  parent[g.encode()] = {g.encode(), 0};
  graphs[g.encode()] = g;
  std::deque<Graph> work{g};
  while (!work.empty()) {
    Graph cur = work.front();
    work.pop_front();
    if (cur == target) {
      sequence.clear();
      std::uint64_t code = cur.encode();
      while (parent[code].second != 0) {
        sequence.push_back(parent[code].second);
        code = parent[code].first;
      }
      std::reverse(sequence.begin(), sequence.end());
      return true;
    }
    for (int a = 1; a <= g.num_qubits(); ++a) {
      Graph next = local_complement(cur, a);
      std::uint64_t code = next.encode();
      if (!parent.contains(code)) {
        parent[code] = {cur.encode(), a};
        graphs[code] = next;
        work.push_back(next);
      }
    }
  }
  return false;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.toggle_edge(i, i + 1);
  return g;
}

Graph ring_graph(int n) {
  Graph g = path_graph(n);
  if (n > 2) g.toggle_edge(n, 1);
  return g;
}

Graph star_graph(int n) {
  Graph g(n);
  for (int i = 2; i <= n; ++i) g.toggle_edge(1, i);
  return g;
}

Graph y_graph(int n) {
  if (n < 4) throw std::invalid_argument("Y graph needs n >= 4");
  Graph g(n);
  g.toggle_edge(1, 2);
  g.toggle_edge(2, 3);
  for (int i = 4; i <= n; ++i) g.toggle_edge(3, i);
  return g;
}

Graph builtin_graph(const std::string& name) {
  if (name == "C4") return path_graph(4);
  if (name == "C5") return path_graph(5);
  if (name == "C6") return path_graph(6);
  if (name == "R5") return ring_graph(5);
  if (name.size() > 3 && name.substr(0, 3) == "GHZ") return star_graph(std::stoi(name.substr(3)));
  if (name.size() > 1 && name[0] == 'Y') return y_graph(std::stoi(name.substr(1)));
  if (name.size() > 1 && name[0] == 'C') return path_graph(std::stoi(name.substr(1)));
  throw std::invalid_argument("unknown builtin graph: " + name);
}

}  // namespace graphsep

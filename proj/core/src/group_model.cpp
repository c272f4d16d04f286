#include "cusplab/group_model.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace cusplab {

namespace {

const char* kLetterNames = "abcdefghijklmnopqrstuvwxyz";

// floor division for lattice reduction (C++ '/' truncates toward zero)
long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

GroupModel GroupModel::free_group(int rank) {
  if (rank < 1 || rank > 26)
    throw std::invalid_argument("free group: rank must be in 1..26");
  GroupModel m;
  m.family_ = Family::Free;
  m.rank_ = rank;
  for (int i = 0; i < rank; ++i) m.names_.emplace_back(1, kLetterNames[i]);
  return m;
}

GroupModel GroupModel::free_abelian(int rank) {
  GroupModel m = free_group(rank);
  m.family_ = Family::FreeAbelian;
  return m;
}

GroupModel GroupModel::finite(std::vector<std::vector<int>> table, std::vector<std::string> names,
                              std::vector<int> generator_elements) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("finite group: empty table");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("finite group: table is not square");
  for (const auto& row : table)
    for (int e : row)
      if (e < 0 || e >= n) throw std::invalid_argument("finite group: table entry out of range");

  // locate the two-sided identity
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw std::invalid_argument("finite group: no identity element");

  std::vector<int> inv(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (table[x][y] == identity && table[y][x] == identity) {
        inv[x] = y;
        break;
      }
    }
    if (inv[x] < 0) throw std::invalid_argument("finite group: element without inverse");
  }

  GroupModel m;
  m.family_ = Family::Finite;
  m.table_ = std::move(table);
  m.identity_ = identity;
  m.inverse_elem_ = std::move(inv);
  if (names.empty()) {
    names.resize(n);
    int k = 1;
    for (int e = 0; e < n; ++e) names[e] = (e == identity) ? "e" : "g" + std::to_string(k++);
  }
  if (static_cast<int>(names.size()) != n)
    throw std::invalid_argument("finite group: names size mismatch");
  m.names_ = std::move(names);
  m.single_char_names_ =
      std::all_of(m.names_.begin(), m.names_.end(), [](const std::string& s) { return s.size() == 1; });
  if (generator_elements.empty()) {
    for (int e = 0; e < n; ++e)
      if (e != identity) generator_elements.push_back(e);
  }
  for (int e : generator_elements)
    if (e < 0 || e >= n) throw std::invalid_argument("finite group: generator index out of range");
  m.generator_elems_ = std::move(generator_elements);
  m.rank_ = static_cast<int>(m.generator_elems_.size());
  return m;
}

int GroupModel::num_symbols() const {
  return family_ == Family::Finite ? order() : rank_;
}

const std::string& GroupModel::symbol_name(int sym) const {
  if (sym < 0 || sym >= num_symbols()) throw std::invalid_argument("symbol index out of range");
  return names_[sym];
}

std::vector<Word> GroupModel::default_generators() const {
  std::vector<Word> gens;
  if (family_ == Family::Finite) {
    for (int e : generator_elems_) gens.push_back(Word{Letter{e, false}});
  } else {
    for (int s = 0; s < rank_; ++s) gens.push_back(Word{Letter{s, false}});
  }
  return gens;
}

Word GroupModel::parse_word(std::string_view text) const {
  Word w;
  if (single_char_names_) {
    for (size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c == ' ' || c == '\t') continue;
      int sym = -1;
      for (int s = 0; s < num_symbols(); ++s)
        if (names_[s][0] == c) {
          sym = s;
          break;
        }
      if (sym < 0)
        throw std::invalid_argument(std::string("word: unknown symbol '") + c + "'");
      bool inv = false;
      if (i + 1 < text.size() && text[i + 1] == '-') {
        inv = true;
        ++i;
      }
      w.push_back(Letter{sym, inv});
    }
    return w;
  }
  // whitespace-separated tokens, optional trailing '-'
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    if (j == i) break;
    std::string tok(text.substr(i, j - i));
    bool inv = false;
    if (tok.size() > 1 && tok.back() == '-') {
      inv = true;
      tok.pop_back();
    }
    int sym = -1;
    for (int s = 0; s < num_symbols(); ++s)
      if (names_[s] == tok) {
        sym = s;
        break;
      }
    if (sym < 0) throw std::invalid_argument("word: unknown symbol '" + tok + "'");
    w.push_back(Letter{sym, inv});
    i = j;
  }
  return w;
}

std::string GroupModel::render_word(const Word& w) const {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (!single_char_names_ && i > 0) out += ' ';
    out += symbol_name(w[i].sym);
    if (w[i].inv) out += '-';
  }
  return out;
}

Word GroupModel::normal_form(const Word& w) const {
  switch (family_) {
    case Family::Free: {
      Word stack;
      for (const Letter& l : w) {
        if (l.sym < 0 || l.sym >= rank_) throw std::invalid_argument("word: symbol out of range");
        if (!stack.empty() && stack.back().sym == l.sym && stack.back().inv != l.inv)
          stack.pop_back();
        else
          stack.push_back(l);
      }
      return stack;
    }
    case Family::FreeAbelian: {
      std::vector<long long> e = exponents(w);
      Word out;
      for (int s = 0; s < rank_; ++s) {
        for (long long k = 0; k < (e[s] > 0 ? e[s] : -e[s]); ++k)
          out.push_back(Letter{s, e[s] < 0});
      }
      return out;
    }
    case Family::Finite: {
      const int e = element_of(w);
      if (e == identity_) return {};
      return Word{Letter{e, false}};
    }
  }
  throw std::logic_error("unreachable");
}

Word GroupModel::multiply(const Word& a, const Word& b) const {
  Word ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  return normal_form(ab);
}

Word GroupModel::inverse(const Word& w) const {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(Letter{it->sym, !it->inv});
  return normal_form(r);
}

bool GroupModel::shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<long long> GroupModel::exponents(const Word& w) const {
  if (family_ != Family::FreeAbelian)
    throw std::logic_error("exponents: free abelian family only");
  std::vector<long long> e(rank_, 0);
  for (const Letter& l : w) {
    if (l.sym < 0 || l.sym >= rank_) throw std::invalid_argument("word: symbol out of range");
    e[l.sym] += l.inv ? -1 : 1;
  }
  return e;
}

int GroupModel::element_of(const Word& w) const {
  if (family_ != Family::Finite) throw std::logic_error("element_of: finite family only");
  int e = identity_;
  for (const Letter& l : w) {
    if (l.sym < 0 || l.sym >= order()) throw std::invalid_argument("word: symbol out of range");
    e = table_[e][l.inv ? inverse_elem_[l.sym] : l.sym];
  }
  return e;
}

int CayleyBall::find(const GroupModel& m, const Word& w) const {
  auto it = index.find(m.render_word(m.normal_form(w)));
  return it == index.end() ? -1 : it->second;
}

int CayleyBall::max_word_length() const {
  size_t mx = 0;
  for (const Word& w : words) mx = std::max(mx, w.size());
  return static_cast<int>(mx);
}

CayleyBall cayley_ball(const GroupModel& m, int radius, std::vector<Word> generators) {
  if (radius < 0) throw std::invalid_argument("cayley ball: negative radius");
  if (generators.empty()) generators = m.default_generators();
  std::vector<Word> gens;
  for (Word& g : generators) {
    Word nf = m.normal_form(g);
    if (!nf.empty()) gens.push_back(std::move(nf));  // trivial generators add nothing
  }

  CayleyBall ball;
  ball.radius = radius;
  ball.generators = gens;

  std::vector<Word> moves;
  for (const Word& g : gens) {
    moves.push_back(g);
    Word gi = m.inverse(g);
    if (!(gi == g)) moves.push_back(gi);
  }

  ball.words.push_back({});
  ball.dist.push_back(0);
  ball.index[""] = 0;
  std::vector<std::pair<int, int>> edges;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (const Word& mv : moves) {
      const Word nxt = m.multiply(ball.words[u], mv);
      const std::string key = m.render_word(nxt);
      auto it = ball.index.find(key);
      int v;
      if (it != ball.index.end()) {
        v = it->second;
      } else {
        if (ball.dist[u] + 1 > radius) continue;
        v = static_cast<int>(ball.words.size());
        ball.index[key] = v;
        ball.words.push_back(nxt);
        ball.dist.push_back(ball.dist[u] + 1);
        q.push(v);
      }
      if (v != u) edges.emplace_back(u, v);
    }
  }

  ball.graph = MetricGraph(static_cast<int>(ball.words.size()));
  for (auto& [u, v] : edges) ball.graph.add_edge(u, v);
  for (int v = 0; v < ball.graph.num_vertices(); ++v)
    ball.graph.set_label(v, v == 0 ? "1" : m.render_word(ball.words[v]));
  return ball;
}

namespace {

// cyclic reduction: w = prefix * core * prefix^-1 with core cyclically reduced
void cyclically_reduce(const Word& w, Word* prefix, Word* core) {
  Word cur = w;
  prefix->clear();
  while (cur.size() >= 2 && cur.front().sym == cur.back().sym &&
         cur.front().inv != cur.back().inv) {
    prefix->push_back(cur.front());
    cur.erase(cur.begin());
    cur.pop_back();
  }
  *core = cur;
}

Word word_power(const GroupModel& m, const Word& w, long long k) {
  Word base = k < 0 ? m.inverse(w) : w;
  Word acc;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) acc = m.multiply(acc, base);
  return acc;
}

}  // namespace

PeripheralSubgroup PeripheralSubgroup::from_spec(const GroupModel& m, const PeripheralSpec& spec) {
  PeripheralSubgroup p;
  p.name_ = spec.name;
  p.family_ = m.family();

  std::vector<Word> gens;
  for (const std::string& text : spec.generator_words) {
    Word w = m.normal_form(m.parse_word(text));
    if (!w.empty()) gens.push_back(std::move(w));
  }
  if (gens.empty())
    throw std::invalid_argument("peripheral '" + spec.name + "': trivial subgroup rejected");

  switch (m.family()) {
    case Family::Free: {
      if (gens.size() != 1)
        throw std::runtime_error("peripheral '" + spec.name +
                                 "': free family supports cyclic peripherals only");
      p.free_gen_ = gens[0];
      Word prefix, core;
      cyclically_reduce(p.free_gen_, &prefix, &core);
      p.free_cyc_len_ = static_cast<int>(core.size());
      break;
    }
    case Family::FreeAbelian: {
      // integer row-echelon basis (pivots positive, zeros below each pivot)
      std::vector<std::vector<long long>> rows;
      for (const Word& g : gens) rows.push_back(m.exponents(g));
      std::vector<std::vector<long long>> basis;
      for (int col = 0; col < m.rank(); ++col) {
        for (bool again = true; again;) {
          again = false;
          int first = -1;
          for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (rows[i][col] == 0) continue;
            if (first < 0) {
              first = i;
              continue;
            }
            // reduce the larger entry by the smaller until one dies
            int a = first, b = i;
            if (std::abs(rows[a][col]) < std::abs(rows[b][col])) std::swap(a, b);
            const long long q = rows[a][col] / rows[b][col];
            for (int c2 = 0; c2 < m.rank(); ++c2) rows[a][c2] -= q * rows[b][c2];
            again = true;
            break;
          }
        }
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
          if (rows[i][col] != 0) {
            std::vector<long long> r = rows[i];
            if (r[col] < 0)
              for (long long& x : r) x = -x;
            basis.push_back(r);
            rows.erase(rows.begin() + i);
            break;
          }
        }
      }
      p.basis_ = std::move(basis);
      break;
    }
    case Family::Finite: {
      std::set<int> sub = {m.element_of({})};
      std::queue<int> q;
      q.push(*sub.begin());
      std::vector<int> gen_elems;
      for (const Word& g : gens) gen_elems.push_back(m.element_of(g));
      while (!q.empty()) {
        const int x = q.front();
        q.pop();
        for (int g : gen_elems) {
          const int y = m.element_of(Word{Letter{x, false}, Letter{g, false}});
          if (sub.insert(y).second) q.push(y);
        }
      }
      if (sub.size() == 1)
        throw std::invalid_argument("peripheral '" + spec.name + "': trivial subgroup rejected");
      p.subgroup_.assign(sub.begin(), sub.end());
      break;
    }
  }
  return p;
}

bool PeripheralSubgroup::contains(const GroupModel& m, const Word& w) const {
  const Word x = m.normal_form(w);
  switch (family_) {
    case Family::Free: {
      if (x.empty()) return true;
      Word prefix, core;
      cyclically_reduce(free_gen_, &prefix, &core);
      // |gen^k| = 2|prefix| + |k|*|core| exactly, so k is determined by |x|
      const long long fixed = 2 * static_cast<long long>(prefix.size());
      const long long len = static_cast<long long>(x.size());
      if (len <= fixed || (len - fixed) % free_cyc_len_ != 0) return false;
      const long long k = (len - fixed) / free_cyc_len_;
      return x == word_power(m, free_gen_, k) || x == word_power(m, free_gen_, -k);
    }
    case Family::FreeAbelian: {
      std::vector<long long> e = m.exponents(x);
      for (const auto& r : basis_) {
        int piv = 0;
        while (r[piv] == 0) ++piv;
        const long long q = floor_div(e[piv], r[piv]);
        for (int c = 0; c < static_cast<int>(e.size()); ++c) e[c] -= q * r[c];
      }
      return std::all_of(e.begin(), e.end(), [](long long v) { return v == 0; });
    }
    case Family::Finite:
      return std::binary_search(subgroup_.begin(), subgroup_.end(), m.element_of(x));
  }
  throw std::logic_error("unreachable");
}

std::string PeripheralSubgroup::coset_key(const GroupModel& m, const CayleyBall& ball,
                                          int vertex) const {
  const Word& g = ball.words[vertex];
  switch (family_) {
    case Family::Free: {
      // shortlex-least ball member of g<w>: candidates g*w^k with |k| small
      // enough that every ball member of the coset is covered
      Word prefix, core;
      cyclically_reduce(free_gen_, &prefix, &core);
      const long long M = ball.max_word_length();
      const long long K = (2 * M + 2 * static_cast<long long>(prefix.size())) /
                              std::max(1, free_cyc_len_) +
                          1;
      const Word* best = nullptr;
      Word best_word;
      for (long long k = -K; k <= K; ++k) {
        Word cand = m.multiply(g, word_power(m, free_gen_, k));
        if (ball.index.find(m.render_word(cand)) == ball.index.end()) continue;
        if (best == nullptr || GroupModel::shortlex_less(cand, best_word)) {
          best_word = std::move(cand);
          best = &best_word;
        }
      }
      return m.render_word(best_word);
    }
    case Family::FreeAbelian: {
      std::vector<long long> e = m.exponents(g);
      for (const auto& r : basis_) {
        int piv = 0;
        while (r[piv] == 0) ++piv;
        const long long q = floor_div(e[piv], r[piv]);
        for (int c = 0; c < static_cast<int>(e.size()); ++c) e[c] -= q * r[c];
      }
      std::string key;
      for (long long v : e) key += std::to_string(v) + ",";
      return key;
    }
    case Family::Finite: {
      const int x = m.element_of(g);
      int least = -1;
      for (int h : subgroup_) {
        const int y = m.element_of(Word{Letter{x, false}, Letter{h, false}});
        if (least < 0 || y < least) least = y;
      }
      return std::to_string(least);
    }
  }
  throw std::logic_error("unreachable");
}

CosetPieces coset_pieces(const CayleyBall& ball, const GroupModel& m, const PeripheralSpec& spec) {
  const PeripheralSubgroup p = PeripheralSubgroup::from_spec(m, spec);

  const int n = ball.graph.num_vertices();
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (ball.words[a].size() != ball.words[b].size() || ball.words[a] != ball.words[b])
      return GroupModel::shortlex_less(ball.words[a], ball.words[b]);
    return a < b;
  });

  CosetPieces out;
  out.peripheral = spec.name;
  out.piece_of.assign(n, -1);
  std::map<std::string, int> piece_by_key;
  for (int v : order) {
    const std::string key = p.coset_key(m, ball, v);
    auto [it, fresh] = piece_by_key.try_emplace(key, static_cast<int>(out.members.size()));
    if (fresh) {
      out.members.emplace_back();
      out.rep_vertex.push_back(v);
      out.rep_word.push_back(v == 0 ? "1" : m.render_word(ball.words[v]));
    }
    out.piece_of[v] = it->second;
    out.members[it->second].push_back(v);
  }
  for (auto& piece : out.members) std::sort(piece.begin(), piece.end());
  return out;
}

std::vector<int> left_translate(const CayleyBall& ball, const GroupModel& m, const Word& g) {
  std::vector<int> image(ball.graph.num_vertices(), -1);
  for (int v = 0; v < ball.graph.num_vertices(); ++v)
    image[v] = ball.find(m, m.multiply(g, ball.words[v]));
  return image;
}

}  // namespace cusplab

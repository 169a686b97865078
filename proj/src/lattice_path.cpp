#include "patterngf/lattice_path.hpp"

#include <algorithm>
#include <cstdlib>

#include "patterngf/errors.hpp"

namespace patterngf {

namespace {

int delta(Step s) { return s == Step::Up ? 1 : s == Step::Down ? -1 : 0; }

const Rational& lookup(const std::map<int, Rational>& m, int h, const char* name) {
  auto it = m.find(h);
  if (it == m.end()) throw DomainError(std::string("no ") + name + " weight defined at height " + std::to_string(h));
  return it->second;
}

}  // namespace

char to_char(Step s) { return s == Step::Up ? 'U' : s == Step::Down ? 'D' : 'L'; }

LatticePath::LatticePath(std::vector<Step> steps, int start_height)
    : steps_(std::move(steps)), start_height_(start_height) {
  if (start_height_ < 0) throw DomainError("start height must be nonnegative");
  int h = start_height_;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    h += delta(steps_[i]);
    if (h < 0) throw DomainError("path passes below the x-axis at prefix index " + std::to_string(i));
  }
}

LatticePath LatticePath::parse(const std::string& text, int start_height) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'U': steps.push_back(Step::Up); break;
      case 'L': steps.push_back(Step::Level); break;
      case 'D': steps.push_back(Step::Down); break;
      default: throw DomainError(std::string("unknown step '") + c + "' in path '" + text + "'");
    }
  }
  return LatticePath(std::move(steps), start_height);
}

int LatticePath::end_height() const {
  int h = start_height_;
  for (Step s : steps_) h += delta(s);
  return h;
}

std::vector<int> LatticePath::heights() const {
  std::vector<int> out{start_height_};
  out.reserve(steps_.size() + 1);
  for (Step s : steps_) out.push_back(out.back() + delta(s));
  return out;
}

int LatticePath::max_height() const {
  auto h = heights();
  return *std::max_element(h.begin(), h.end());
}

bool LatticePath::is_dyck() const {
  return std::none_of(steps_.begin(), steps_.end(), [](Step s) { return s == Step::Level; });
}

bool LatticePath::is_closed_dyck() const { return is_dyck() && start_height_ == 0 && end_height() == 0; }

std::string LatticePath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out += to_char(s);
  return out;
}

std::vector<Peak> peaks(const LatticePath& p) {
  std::vector<Peak> out;
  int h = p.start_height();
  for (std::size_t i = 0; i < p.length(); ++i) {
    h += delta(p[i]);
    if (p[i] == Step::Up && i + 1 < p.length() && p[i + 1] == Step::Down) out.push_back({i, h});
  }
  return out;
}

namespace {

void require_closed(const LatticePath& p) {
  if (!p.is_closed_dyck()) throw DomainError("expected a closed Dyck path, got '" + p.to_string() + "'");
}

}  // namespace

BigInt weight_w1(int k, const LatticePath& p) {
  require_closed(p);
  BigInt total = 0;
  int h = 0;
  for (Step s : p.steps()) {
    if (s == Step::Down) total += binomial(h - 1, k - 1);
    h += delta(s);
  }
  return total;
}

BigInt weight_w2(int k, const LatticePath& p) {
  require_closed(p);
  BigInt total = 0;
  for (const Peak& pk : peaks(p)) total += binomial(pk.height - 1, k - 1);
  return total;
}

WeightSpec WeightSpec::uniform(const Rational& b, const Rational& lambda, int max_height) {
  WeightSpec w;
  for (int h = 0; h <= max_height; ++h) {
    w.level[h] = b;
    if (h > 0) w.down[h] = lambda;
  }
  return w;
}

WeightSpec WeightSpec::uniform_peaked(const Rational& nu, const Rational& lambda, int max_height) {
  WeightSpec w;
  w.peak.emplace();
  for (int h = 1; h <= max_height; ++h) {
    w.down[h] = lambda;
    (*w.peak)[h] = nu;
  }
  return w;
}

Rational weight_motzkin(const LatticePath& p, const WeightSpec& w) {
  if (w.peak) throw DomainError("weight_motzkin expects a weight spec without peak weights");
  Rational product = 1;
  int h = p.start_height();
  for (Step s : p.steps()) {
    if (s == Step::Level) product *= lookup(w.level, h, "level");
    if (s == Step::Down) product *= lookup(w.down, h, "down-step");
    h += delta(s);
  }
  return product;
}

Rational weight_peaked(const LatticePath& p, const WeightSpec& w) {
  if (!w.peak) throw DomainError("weight_peaked expects peak weights");
  require_closed(p);
  Rational product = 1;
  int h = 0;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (p[i] == Step::Down) {
      const bool closes_peak = i > 0 && p[i - 1] == Step::Up;
      product *= closes_peak ? lookup(*w.peak, h, "peak") : lookup(w.down, h, "down-step");
    }
    h += delta(p[i]);
  }
  return product;
}

PathStream::PathStream(PathQuery query, std::size_t bound) : query_(query) {
  if (query_.length > bound)
    throw BoundExceeded("path length", static_cast<long>(query_.length), static_cast<long>(bound));
  steps_.reserve(query_.length);
  heights_.reserve(query_.length);
}

bool PathStream::feasible(int height, std::size_t remaining) const {
  if (height < 0) return false;
  if (query_.max_height && height > *query_.max_height) return false;
  const auto gap = static_cast<std::size_t>(std::abs(height - query_.to));
  if (gap > remaining) return false;
  if (query_.kind == PathKind::Dyck) {
    if ((remaining - gap) % 2 != 0) return false;
    // A Dyck path confined to height 0 cannot move at all.
    if (remaining > gap && query_.max_height && *query_.max_height == 0) return false;
  }
  return true;
}

bool PathStream::push(Step s) {
  const int h = (heights_.empty() ? query_.from : heights_.back()) + delta(s);
  if (!feasible(h, query_.length - steps_.size() - 1)) return false;
  steps_.push_back(s);
  heights_.push_back(h);
  return true;
}

void PathStream::descend() {
  while (steps_.size() < query_.length) {
    // Every feasible state has a completion, so one of these succeeds.
    if (push(Step::Up)) continue;
    if (query_.kind == PathKind::Motzkin && push(Step::Level)) continue;
    push(Step::Down);
  }
}

LatticePath PathStream::current() const { return LatticePath(steps_, query_.from); }

std::optional<LatticePath> PathStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (query_.to < 0 || !feasible(query_.from, query_.length)) {
      done_ = true;
      return std::nullopt;
    }
    descend();
    return current();
  }
  while (!steps_.empty()) {
    const Step last = steps_.back();
    steps_.pop_back();
    heights_.pop_back();
    bool advanced = false;
    if (last == Step::Up) {
      advanced = (query_.kind == PathKind::Motzkin && push(Step::Level)) || push(Step::Down);
    } else if (last == Step::Level) {
      advanced = push(Step::Down);
    }
    if (advanced) {
      descend();
      return current();
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<LatticePath> enumerate_paths(const PathQuery& query, std::size_t bound) {
  std::vector<LatticePath> out;
  PathStream stream(query, bound);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace patterngf

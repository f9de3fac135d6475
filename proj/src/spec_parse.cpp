#include <cctype>
#include <sstream>

#include "engel/constructions.hpp"

namespace engel {

bool operator==(const GroupSpec& a, const GroupSpec& b) {
  return a.kind == b.kind && a.n == b.n && a.p == b.p && a.k == b.k &&
         a.args == b.args && a.path == b.path;
}

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::cyclic: return "C" + std::to_string(n);
    case Kind::dihedral: return "D" + std::to_string(n);
    case Kind::symmetric: return "S" + std::to_string(n);
    case Kind::alternating: return "A" + std::to_string(n);
    case Kind::quaternion8: return "Q8";
    case Kind::product:
      return args[0].to_string() + "x" + args[1].to_string();
    case Kind::wreath:
      return "wreath(" + args[0].to_string() + "," + args[1].to_string() + ")";
    case Kind::free_nil:
      return "fnil(p=" + std::to_string(p) + ",k=" + std::to_string(k) + ")";
    case Kind::free_nil_exp4:
      return "fnil4(k=" + std::to_string(k) + ")";
    case Kind::gupta_levin:
      return "gl(p=" + std::to_string(p) + ",k=" + std::to_string(k) + ")";
    case Kind::cayley_file: return "cayley(" + path + ")";
  }
  return "?";
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec s = parse_product();
    skip_ws();
    if (pos_ != text_.size())
      throw parse_error("unexpected trailing input '" +
                            text_.substr(pos_) + "'",
                        pos_);
    return s;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw parse_error(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) throw parse_error("expected a number", pos_);
    return std::stoi(text_.substr(start, pos_ - start));
  }

  int parse_kv(const std::string& key) {
    skip_ws();
    if (text_.compare(pos_, key.size(), key) != 0)
      throw parse_error("expected '" + key + "='", pos_);
    pos_ += key.size();
    expect('=');
    return parse_int();
  }

  GroupSpec parse_product() {
    GroupSpec left = parse_atom();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'X')) {
        ++pos_;
        GroupSpec right = parse_atom();
        GroupSpec prod;
        prod.kind = GroupSpec::Kind::product;
        prod.args = {std::move(left), std::move(right)};
        left = std::move(prod);
      } else {
        return left;
      }
    }
  }

  GroupSpec parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw parse_error("expected a group spec", pos_);
    char c = text_[pos_];
    GroupSpec s;
    if (c == 'C' || c == 'D' || c == 'S' || c == 'A') {
      ++pos_;
      s.n = parse_int();
      switch (c) {
        case 'C':
          s.kind = GroupSpec::Kind::cyclic;
          if (s.n < 1) throw parse_error("cyclic order must be >= 1", pos_);
          break;
        case 'D':
          s.kind = GroupSpec::Kind::dihedral;
          if (s.n < 6 || s.n % 2 != 0)
            throw parse_error("dihedral order must be even and >= 6", pos_);
          break;
        case 'S':
          s.kind = GroupSpec::Kind::symmetric;
          if (s.n < 1) throw parse_error("symmetric degree must be >= 1", pos_);
          break;
        case 'A':
          s.kind = GroupSpec::Kind::alternating;
          if (s.n < 3) throw parse_error("alternating degree must be >= 3", pos_);
          break;
      }
      return s;
    }
    if (c == 'Q') {
      ++pos_;
      int n = parse_int();
      if (n != 8) throw parse_error("only Q8 is supported", pos_);
      s.kind = GroupSpec::Kind::quaternion8;
      return s;
    }
    if (match_word("wreath")) {
      expect('(');
      GroupSpec a = parse_product();
      expect(',');
      GroupSpec b = parse_product();
      expect(')');
      s.kind = GroupSpec::Kind::wreath;
      s.args = {std::move(a), std::move(b)};
      return s;
    }
    if (match_word("fnil4")) {
      expect('(');
      s.k = parse_kv("k");
      expect(')');
      s.kind = GroupSpec::Kind::free_nil_exp4;
      if (s.k < 2) throw parse_error("fnil4 rank must be >= 2", pos_);
      return s;
    }
    if (match_word("fnil")) {
      expect('(');
      s.p = parse_kv("p");
      expect(',');
      s.k = parse_kv("k");
      expect(')');
      s.kind = GroupSpec::Kind::free_nil;
      if (s.p < 3 || !is_prime(s.p))
        throw parse_error("fnil modulus must be an odd prime", pos_);
      if (s.k < 2) throw parse_error("fnil rank must be >= 2", pos_);
      return s;
    }
    if (match_word("gl")) {
      expect('(');
      s.p = parse_kv("p");
      expect(',');
      s.k = parse_kv("k");
      expect(')');
      s.kind = GroupSpec::Kind::gupta_levin;
      if (s.p != 2 && (s.p < 3 || !is_prime(s.p)))
        throw parse_error("gl modulus must be 2 or an odd prime", pos_);
      if (s.k < 2) throw parse_error("gl rank must be >= 2", pos_);
      return s;
    }
    if (match_word("cayley")) {
      expect('(');
      std::size_t close = text_.find(')', pos_);
      if (close == std::string::npos) throw parse_error("expected ')'", pos_);
      s.kind = GroupSpec::Kind::cayley_file;
      s.path = text_.substr(pos_, close - pos_);
      // trim surrounding whitespace from the path
      while (!s.path.empty() && std::isspace(static_cast<unsigned char>(s.path.front())))
        s.path.erase(s.path.begin());
      while (!s.path.empty() && std::isspace(static_cast<unsigned char>(s.path.back())))
        s.path.pop_back();
      if (s.path.empty()) throw parse_error("cayley() needs a file path", pos_);
      pos_ = close + 1;
      return s;
    }
    throw parse_error(std::string("unknown token starting with '") + c + "'",
                      pos_);
  }

  bool match_word(const std::string& w) {
    skip_ws();
    if (text_.compare(pos_, w.size(), w) != 0) return false;
    // do not let "fnil" swallow the prefix of "fnil4"
    std::size_t after = pos_ + w.size();
    if (after < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[after]))) &&
        text_[after] != '(')
      return false;
    pos_ = after;
    return true;
  }

  static bool is_prime(int v) {
    if (v < 2) return false;
    for (int d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  }
};

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  return SpecParser(text).parse();
}

}  // namespace engel

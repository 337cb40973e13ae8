#include "support/synthetic.hpp"

#include <set>
#include <string>

#include "cloneforge/rng.hpp"

namespace cloneforge::testing {
namespace {

const char* const kVerbs[] = {"compute", "scan", "update", "count", "merge", "find",
                              "sum", "check", "apply", "fold", "reduce", "clamp",
                              "parse", "encode", "measure", "shift"};
const char* const kNouns[] = {"total", "buffer", "range", "items", "weights", "limit",
                              "score", "bytes", "offset", "window", "delta", "peak",
                              "index", "state", "table", "value"};
const char* const kLocals[] = {"acc", "count", "best", "tmp", "step", "flag",
                               "lo", "hi", "mid", "width", "carry", "result"};

struct Var {
  std::string name;
  bool is_double = false;
};

class Builder {
 public:
  explicit Builder(std::uint64_t seed) : rng_(seed) {}

  ast::SourceFunction build(std::size_t index) {
    const bool camel = rng_.below(3) == 0;
    std::string verb = kVerbs[rng_.below(std::size(kVerbs))];
    std::string noun = kNouns[rng_.below(std::size(kNouns))];
    if (camel) noun[0] = static_cast<char>(noun[0] - 'a' + 'A');
    const std::string name = verb + (camel ? "" : "_") + noun + std::to_string(index);

    ints_.clear();
    loops_ = 0;
    doubles_.clear();
    has_array_ = rng_.below(3) != 0;
    has_double_ = rng_.below(3) == 0;
    std::string params = "int n";
    ints_.push_back("n");
    if (has_array_) params += ", int *arr";
    if (has_double_) {
      params += ", double x";
      doubles_.push_back("x");
    }

    const char* ret = has_double_ && rng_.below(2) == 0 ? "double" : "int";
    std::string body;
    std::set<std::string> used;
    const std::size_t locals = 1 + rng_.below(4);
    for (std::size_t i = 0; i < locals; ++i) {
      std::string v = kLocals[rng_.below(std::size(kLocals))];
      if (!used.insert(v).second) continue;
      if (has_double_ && rng_.below(4) == 0) {
        body += "  double " + v + " = " + std::to_string(rng_.below(9)) + ".5;\n";
        doubles_.push_back(v);
      } else {
        body += "  int " + v + " = " + std::to_string(rng_.below(10)) + ";\n";
        ints_.push_back(v);
      }
    }
    const std::size_t stmts = 2 + rng_.below(5);
    for (std::size_t i = 0; i < stmts; ++i) body += statement(1, 2);
    body += "  return " + (std::string(ret) == "double" ? dexpr() : iexpr(1)) + ";\n";
    return {"synthetic/" + name, Language::C,
            std::string(ret) + " " + name + "(" + params + ")\n{\n" + body + "}\n"};
  }

 private:
  std::string pad(int depth) const { return std::string(static_cast<std::size_t>(depth) * 2, ' '); }

  const std::string& int_var() { return ints_[rng_.below(ints_.size())]; }

  // A local int other than the loop bound, when one exists.
  std::string target() {
    if (ints_.size() == 1) return "n";
    return ints_[1 + rng_.below(ints_.size() - 1)];
  }

  std::string atom() {
    switch (rng_.below(has_array_ ? 4 : 3)) {
      case 0:
        return std::to_string(rng_.below(17));
      case 3:
        return "arr[" + std::to_string(rng_.below(4)) + "]";
      default:
        return int_var();
    }
  }

  std::string iexpr(int depth) {
    static const char* const ops[] = {"+", "-", "*", "/", "%", "&", "|", "^"};
    if (depth <= 0 || rng_.below(3) == 0) return atom();
    const char* op = ops[rng_.below(std::size(ops))];
    std::string rhs = atom();
    if (std::string(op) == "/" || std::string(op) == "%") rhs = std::to_string(1 + rng_.below(9));
    return iexpr(depth - 1) + " " + op + " " + rhs;
  }

  std::string dexpr() {
    if (doubles_.empty()) return "0.0";
    const std::string& v = doubles_[rng_.below(doubles_.size())];
    switch (rng_.below(3)) {
      case 0:
        return v + " * " + std::to_string(1 + rng_.below(5)) + ".0";
      case 1:
        return v + " + " + int_var();
      default:
        return v;
    }
  }

  std::string cond() {
    static const char* const cmp[] = {"<", ">", "<=", ">=", "==", "!="};
    std::string c = int_var() + " " + cmp[rng_.below(std::size(cmp))] + " " + atom();
    if (rng_.below(5) == 0) c += std::string(rng_.below(2) ? " && " : " || ") + int_var() + " > 0";
    return c;
  }

  std::string block(int depth, int nest) {
    std::string out = "{\n";
    const std::size_t n = 1 + rng_.below(2);
    for (std::size_t i = 0; i < n; ++i) out += statement(depth + 1, nest - 1);
    return out + pad(depth) + "}";
  }

  std::string statement(int depth, int nest) {
    const std::string p = pad(depth);
    const std::size_t pick = rng_.below(nest > 0 ? 11 : 6);
    switch (pick) {
      case 0:
        return p + target() + " = " + iexpr(2) + ";\n";
      case 1:
        return p + target() + (rng_.below(2) ? "++" : "--") + ";\n";
      case 2:
        return p + target() + " = " + cond() + " ? " + atom() + " : " + atom() + ";\n";
      case 3: {
        static const char* const ops[] = {"+=", "-=", "^=", "|="};
        return p + target() + " " + ops[rng_.below(std::size(ops))] + " " + atom() + ";\n";
      }
      case 4:
        if (!doubles_.empty()) return p + doubles_[rng_.below(doubles_.size())] + " = " + dexpr() + ";\n";
        return p + "printf(\"%d\\n\", " + int_var() + ");\n";
      case 5:
        if (has_array_) return p + "arr[" + std::to_string(rng_.below(4)) + "] = " + iexpr(1) + ";\n";
        return p + "printf(\"%d\\n\", " + int_var() + ");\n";
      case 6:
        return p + "if (" + cond() + ") " + block(depth, nest) + "\n";
      case 7:
        return p + "if (" + cond() + ") " + block(depth, nest) + " else " + block(depth, nest) + "\n";
      case 8: {
        const std::string i = "i" + std::to_string(depth);
        std::string body = "{\n";
        if (has_array_) {
          body += pad(depth + 1) + target() + " += arr[" + i + "];\n";
        } else {
          body += pad(depth + 1) + target() + " += " + i + ";\n";
        }
        if (rng_.below(2) == 0) body += statement(depth + 1, nest - 1);
        body += p + "}";
        return p + "for (int " + i + " = 0; " + i + " < n; " + i + "++) " + body + "\n";
      }
      case 9: {
        const std::string k = "k" + std::to_string(++loops_);
        return p + "int " + k + " = n;\n" + p + "while (" + k + " > 0) {\n" + pad(depth + 1) +
               target() + " += " + k + ";\n" + pad(depth + 1) + k + "--;\n" + p + "}\n";
      }
      default:
        return p + "if (" + cond() + ") {\n" + pad(depth + 1) + "return " + atom() + ";\n" + p + "}\n";
    }
  }

  Rng rng_;
  std::vector<std::string> ints_;
  std::vector<std::string> doubles_;
  bool has_array_ = false;
  bool has_double_ = false;
  int loops_ = 0;
};

}  // namespace

std::vector<ast::SourceFunction> synthetic_c_functions(std::size_t count, std::uint64_t seed) {
  Builder b(seed);
  std::vector<ast::SourceFunction> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(b.build(i));
  return out;
}

}  // namespace cloneforge::testing

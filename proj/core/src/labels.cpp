#include "cloneforge/labels.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace cloneforge::labels {

std::vector<AstLabel> label_sequence(const ast::SyntaxTree& tree) {
  std::vector<AstLabel> out;
  for (const ast::Token& t : ast::flatten_tokens(tree)) {
    const ast::AstNode* parent = t.node->parent;
    out.push_back(AstLabel{std::string(t.kind),
                           std::string(parent != nullptr ? parent->kind : t.node->kind)});
  }
  return out;
}

LabelVocab::LabelVocab() : LabelVocab(std::vector<std::string>{}) {}

LabelVocab::LabelVocab(std::vector<std::string> labels) {
  labels_ = {std::string(kPadLabel), std::string(kUnkLabel), std::string(kClsLabel),
             std::string(kSepLabel)};
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  for (std::string& l : labels) {
    if (std::find(labels_.begin(), labels_.begin() + 4, l) != labels_.begin() + 4) continue;
    labels_.push_back(std::move(l));
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    ids_.emplace(labels_[i], static_cast<std::int32_t>(i));
  }
}

std::int32_t LabelVocab::id_of(std::string_view label) const {
  const auto it = ids_.find(label);
  return it == ids_.end() ? kUnk : it->second;
}

std::vector<std::int32_t> LabelVocab::encode(std::span<const AstLabel> labels) const {
  std::vector<std::int32_t> out;
  out.reserve(labels.size());
  for (const AstLabel& l : labels) out.push_back(id_of(l.rendered()));
  return out;
}

std::string LabelVocab::to_text() const {
  std::string out;
  for (const std::string& l : labels_) out += l + "\n";
  return out;
}

LabelVocab LabelVocab::from_text(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.size() < 4 || lines[0] != kPadLabel || lines[1] != kUnkLabel ||
      lines[2] != kClsLabel || lines[3] != kSepLabel) {
    throw Error("label vocabulary file does not start with the special labels");
  }
  if (!std::is_sorted(lines.begin() + 4, lines.end())) {
    throw Error("label vocabulary file is not in lexicographic order");
  }
  return LabelVocab(std::vector<std::string>(lines.begin() + 4, lines.end()));
}

void LabelVocab::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << to_text();
}

LabelVocab LabelVocab::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str());
}

LabelVocab build_label_vocab(std::span<const ast::SourceFunction> corpus) {
  std::set<std::string> seen;
  for (const ast::SourceFunction& fn : corpus) {
    for (const AstLabel& l : label_sequence(ast::parse(fn))) seen.insert(l.rendered());
  }
  return LabelVocab(std::vector<std::string>(seen.begin(), seen.end()));
}

}  // namespace cloneforge::labels

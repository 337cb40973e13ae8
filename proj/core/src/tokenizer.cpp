#include "cloneforge/tokenizer.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

#include "cloneforge/labels.hpp"
#include "cloneforge/rng.hpp"

namespace cloneforge::tokenizer {
namespace {

constexpr std::string_view kHeader = "cloneforge-bpe 1";
constexpr std::string_view kSpecialNames[] = {"[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"};

std::uint64_t pair_key(std::int32_t left, std::int32_t right) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(left)) << 32) |
         static_cast<std::uint32_t>(right);
}

std::string to_hex(std::string_view bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out += kDigits[c >> 4];
    out += kDigits[c & 0xf];
  }
  return out;
}

std::string from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw Error("invalid hex digit in subword model");
  };
  if (hex.size() % 2 != 0 || hex.empty()) throw Error("invalid hex piece in subword model");
  std::string out;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out += static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1]));
  }
  return out;
}

// Merges every non-overlapping occurrence of (left, right), scanning left to right.
bool merge_in_place(std::vector<std::int32_t>& syms, std::int32_t left, std::int32_t right,
                    std::int32_t result) {
  bool changed = false;
  std::size_t out = 0;
  for (std::size_t i = 0; i < syms.size();) {
    if (i + 1 < syms.size() && syms[i] == left && syms[i + 1] == right) {
      syms[out++] = result;
      i += 2;
      changed = true;
    } else {
      syms[out++] = syms[i++];
    }
  }
  syms.resize(out);
  return changed;
}

}  // namespace

SubwordModel::SubwordModel() {
  for (std::string_view s : kSpecialNames) pieces_.emplace_back(s);
  for (int b = 0; b < 256; ++b) {
    pieces_.emplace_back(1, static_cast<char>(b));
    piece_ids_.emplace(pieces_.back(), static_cast<std::int32_t>(pieces_.size() - 1));
  }
}

std::int32_t SubwordModel::add_merge(std::int32_t left, std::int32_t right) {
  std::string merged = pieces_.at(static_cast<std::size_t>(left)) +
                       pieces_.at(static_cast<std::size_t>(right));
  std::int32_t result;
  if (const auto it = piece_ids_.find(merged); it != piece_ids_.end()) {
    result = it->second;
  } else {
    result = static_cast<std::int32_t>(pieces_.size());
    pieces_.push_back(merged);
    piece_ids_.emplace(std::move(merged), result);
  }
  rank_.emplace(pair_key(left, right), static_cast<std::uint32_t>(merges_.size()));
  merges_.push_back(Merge{left, right, result});
  return result;
}

std::vector<std::int32_t> SubwordModel::encode_token(std::string_view token) const {
  std::vector<std::int32_t> syms;
  syms.reserve(token.size());
  for (unsigned char c : token) syms.push_back(kFirstByte + c);
  while (syms.size() > 1) {
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (std::size_t i = 0; i + 1 < syms.size(); ++i) {
      const auto it = rank_.find(pair_key(syms[i], syms[i + 1]));
      if (it != rank_.end()) best = std::min(best, it->second);
    }
    if (best == std::numeric_limits<std::uint32_t>::max()) break;
    const Merge& m = merges_[best];
    merge_in_place(syms, m.left, m.right, m.result);
  }
  return syms;
}

std::string SubwordModel::decode(std::span<const std::int32_t> ids) const {
  std::string out;
  for (std::int32_t id : ids) {
    if (is_special(id)) continue;
    out += piece(id);
  }
  return out;
}

std::string SubwordModel::to_text() const {
  std::ostringstream out;
  out << kHeader << "\n";
  out << "corpus-sha256 " << (corpus_hash_.empty() ? "-" : corpus_hash_) << "\n";
  out << "target-vocab " << target_vocab_ << "\n";
  out << "specials";
  for (std::string_view s : kSpecialNames) out << " " << s;
  out << "\n";
  out << "merges " << merges_.size() << "\n";
  for (const Merge& m : merges_) {
    out << to_hex(piece(m.left)) << " " << to_hex(piece(m.right)) << "\n";
  }
  out << "vocab " << pieces_.size() - kSpecialCount << "\n";
  for (std::size_t id = kSpecialCount; id < pieces_.size(); ++id) {
    out << id << " " << to_hex(pieces_[id]) << "\n";
  }
  return out.str();
}

SubwordModel SubwordModel::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto next_line = [&]() -> std::string {
    if (!std::getline(in, line)) throw Error("truncated subword model");
    return line;
  };
  auto field = [&](std::string_view name) -> std::string {
    const std::string l = next_line();
    if (l.rfind(std::string(name) + " ", 0) != 0) {
      throw Error("subword model: expected '" + std::string(name) + "'");
    }
    return l.substr(name.size() + 1);
  };
  if (next_line() != kHeader) throw Error("not a cloneforge subword model");
  SubwordModel model;
  model.corpus_hash_ = field("corpus-sha256");
  if (model.corpus_hash_ == "-") model.corpus_hash_.clear();
  model.target_vocab_ = std::stoull(field("target-vocab"));
  {
    std::string expected;
    for (std::string_view s : kSpecialNames) expected += (expected.empty() ? "" : " ") + std::string(s);
    if (field("specials") != expected) throw Error("subword model: unexpected specials");
  }
  const std::size_t merge_count = std::stoull(field("merges"));
  for (std::size_t i = 0; i < merge_count; ++i) {
    std::istringstream parts(next_line());
    std::string l, r;
    if (!(parts >> l >> r)) throw Error("subword model: malformed merge line");
    const auto li = model.piece_ids_.find(from_hex(l));
    const auto ri = model.piece_ids_.find(from_hex(r));
    if (li == model.piece_ids_.end() || ri == model.piece_ids_.end()) {
      throw Error("subword model: merge refers to an unknown piece");
    }
    model.add_merge(li->second, ri->second);
  }
  const std::size_t vocab_count = std::stoull(field("vocab"));
  if (vocab_count != model.learned_size()) throw Error("subword model: vocab size mismatch");
  for (std::size_t i = 0; i < vocab_count; ++i) {
    std::istringstream parts(next_line());
    std::size_t id = 0;
    std::string hex;
    if (!(parts >> id >> hex) || id != i + kSpecialCount || model.pieces_[id] != from_hex(hex)) {
      throw Error("subword model: vocab does not match merges");
    }
  }
  return model;
}

void SubwordModel::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << to_text();
}

SubwordModel SubwordModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str());
}

std::string corpus_hash(std::span<const std::vector<std::string>> corpus) {
  Sha256 h;
  for (const auto& stream : corpus) {
    for (const std::string& tok : stream) {
      h.update(tok);
      h.update("\n");
    }
    h.update("\n");
  }
  return h.hex_digest();
}

SubwordModel train_subword(std::span<const std::vector<std::string>> corpus,
                           std::size_t target_vocab, bool require_target) {
  if (target_vocab <= SubwordModel::kBaseSymbols) {
    throw Error("target vocabulary must exceed the 256 byte symbols");
  }
  std::unordered_map<std::string, std::uint64_t> freq;
  for (const auto& stream : corpus) {
    for (const std::string& tok : stream) {
      if (!tok.empty()) ++freq[tok];
    }
  }
  if (freq.empty()) throw Error("cannot train a subword model on an empty corpus");

  SubwordModel model;
  model.corpus_hash_ = corpus_hash(corpus);
  model.target_vocab_ = target_vocab;

  struct Word {
    std::vector<std::int32_t> syms;
    std::uint64_t freq;
  };
  std::vector<Word> words;
  words.reserve(freq.size());
  for (const auto& [tok, n] : freq) {
    Word w{{}, n};
    for (unsigned char c : tok) w.syms.push_back(SubwordModel::kFirstByte + c);
    words.push_back(std::move(w));
  }

  const std::vector<std::string>& pieces = model.pieces_;
  struct Entry {
    std::uint64_t count;
    std::int32_t left;
    std::int32_t right;
  };
  auto better = [&pieces](const Entry& a, const Entry& b) {
    if (a.count != b.count) return a.count > b.count;
    const std::string& al = pieces[static_cast<std::size_t>(a.left)];
    const std::string& bl = pieces[static_cast<std::size_t>(b.left)];
    if (al != bl) return al < bl;
    return pieces[static_cast<std::size_t>(a.right)] < pieces[static_cast<std::size_t>(b.right)];
  };
  std::set<Entry, decltype(better)> ranked(better);
  std::unordered_map<std::uint64_t, std::uint64_t> counts;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> where;

  for (std::uint32_t wi = 0; wi < words.size(); ++wi) {
    const Word& w = words[wi];
    for (std::size_t i = 0; i + 1 < w.syms.size(); ++i) {
      const std::uint64_t k = pair_key(w.syms[i], w.syms[i + 1]);
      counts[k] += w.freq;
      where[k].push_back(wi);
    }
  }
  for (const auto& [k, n] : counts) {
    ranked.insert(Entry{n, static_cast<std::int32_t>(k >> 32),
                        static_cast<std::int32_t>(k & 0xffffffffu)});
  }

  std::unordered_map<std::uint64_t, std::int64_t> delta;
  std::vector<std::uint32_t> stamp(words.size(), 0);
  std::uint32_t round = 0;
  while (model.learned_size() < target_vocab && !ranked.empty()) {
    const Entry best = *ranked.begin();
    const std::uint64_t key = pair_key(best.left, best.right);
    const std::int32_t result = model.add_merge(best.left, best.right);
    ++round;
    delta.clear();
    const std::vector<std::uint32_t> affected = std::move(where[key]);
    where.erase(key);
    for (std::uint32_t wi : affected) {
      if (stamp[wi] == round) continue;
      stamp[wi] = round;
      Word& w = words[wi];
      std::vector<std::int32_t> before = w.syms;
      if (!merge_in_place(w.syms, best.left, best.right, result)) continue;
      const auto n = static_cast<std::int64_t>(w.freq);
      for (std::size_t i = 0; i + 1 < before.size(); ++i) {
        delta[pair_key(before[i], before[i + 1])] -= n;
      }
      for (std::size_t i = 0; i + 1 < w.syms.size(); ++i) {
        const std::uint64_t k = pair_key(w.syms[i], w.syms[i + 1]);
        delta[k] += n;
        if (k != key) where[k].push_back(wi);
      }
    }
    for (const auto& [k, d] : delta) {
      if (d == 0) continue;
      std::uint64_t& c = counts[k];
      const Entry old{c, static_cast<std::int32_t>(k >> 32), static_cast<std::int32_t>(k & 0xffffffffu)};
      if (c > 0) ranked.erase(old);
      c = static_cast<std::uint64_t>(static_cast<std::int64_t>(c) + d);
      if (c > 0) {
        ranked.insert(Entry{c, old.left, old.right});
      } else {
        counts.erase(k);
      }
    }
    // Every occurrence has been merged; never pick the same pair twice.
    if (const auto it = counts.find(key); it != counts.end()) {
      ranked.erase(Entry{it->second, best.left, best.right});
      counts.erase(it);
    }
  }
  if (require_target && model.learned_size() < target_vocab) {
    throw CorpusTooSmall("corpus supports only " + std::to_string(model.learned_size()) +
                         " symbols, target is " + std::to_string(target_vocab));
  }
  return model;
}

TokenizedSequence encode(const SubwordModel& model, std::span<const std::string> tokens,
                         std::span<const std::int32_t> label_ids, std::size_t max_len) {
  if (label_ids.size() != tokens.size()) {
    throw Error("labels are not aligned with tokens");
  }
  if (max_len < 2) throw Error("max_len must leave room for [CLS] and [SEP]");
  TokenizedSequence seq;
  seq.ids.push_back(SubwordModel::kCls);
  seq.label_ids.push_back(labels::LabelVocab::kCls);
  seq.token_index.push_back(-1);
  for (std::size_t t = 0; t < tokens.size() && !seq.truncated; ++t) {
    for (std::int32_t id : model.encode_token(tokens[t])) {
      if (seq.ids.size() + 1 >= max_len) {
        seq.truncated = true;
        break;
      }
      seq.ids.push_back(id);
      seq.label_ids.push_back(label_ids[t]);
      seq.token_index.push_back(static_cast<std::int32_t>(t));
    }
  }
  seq.ids.push_back(SubwordModel::kSep);
  seq.label_ids.push_back(labels::LabelVocab::kSep);
  seq.token_index.push_back(-1);
  return seq;
}

std::size_t mask_count(std::size_t k, double rate) {
  if (k == 0 || !(rate > 0.0)) return 0;
  // Integer half-up rounding on a micro-unit grid keeps 0.15 * 10 at exactly 2.
  const auto micro = static_cast<std::uint64_t>(rate * 1e6 + 0.5);
  const std::uint64_t scaled = micro * k;
  const std::uint64_t rounded = (scaled + 500000) / 1000000;
  return std::clamp<std::size_t>(static_cast<std::size_t>(rounded), 1, k);
}

TokenizedSequence mask_for_mlm(TokenizedSequence seq, std::uint64_t rng_seed, double rate) {
  if (!seq.mask_positions.empty()) throw Error("sequence is already masked");
  const std::size_t k = seq.content_length();
  const std::size_t m = mask_count(k, rate);
  std::vector<std::uint32_t> positions(k);
  for (std::size_t i = 0; i < k; ++i) positions[i] = static_cast<std::uint32_t>(i + 1);
  Rng rng(rng_seed);
  // Partial Fisher-Yates: the first m slots are a uniform sample without replacement.
  for (std::size_t i = 0; i < m; ++i) {
    std::swap(positions[i], positions[i + rng.below(k - i)]);
  }
  positions.resize(m);
  std::sort(positions.begin(), positions.end());
  for (std::uint32_t p : positions) {
    seq.originals_at_mask.push_back(seq.ids[p]);
    seq.ids[p] = SubwordModel::kMask;
  }
  seq.mask_positions = std::move(positions);
  return seq;
}

std::string to_json_line(const TokenizedSequence& seq) {
  nlohmann::ordered_json j;
  j["ids"] = seq.ids;
  j["label_ids"] = seq.label_ids;
  j["mask_positions"] = seq.mask_positions;
  j["originals_at_mask"] = seq.originals_at_mask;
  j["truncated"] = seq.truncated;
  return j.dump();
}

TokenizedSequence from_json_line(std::string_view line) {
  TokenizedSequence seq;
  try {
    const auto j = nlohmann::json::parse(line);
    seq.ids = j.at("ids").get<std::vector<std::int32_t>>();
    seq.label_ids = j.at("label_ids").get<std::vector<std::int32_t>>();
    seq.mask_positions = j.at("mask_positions").get<std::vector<std::uint32_t>>();
    seq.originals_at_mask = j.at("originals_at_mask").get<std::vector<std::int32_t>>();
    seq.truncated = j.at("truncated").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed sequence record: ") + e.what());
  }
  if (seq.ids.size() != seq.label_ids.size() ||
      seq.mask_positions.size() != seq.originals_at_mask.size()) {
    throw Error("malformed sequence record: misaligned fields");
  }
  return seq;
}

}  // namespace cloneforge::tokenizer

#include "cloneforge/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cloneforge/eval.hpp"
#include "cloneforge/labels.hpp"
#include "cloneforge/rng.hpp"
#include "json.hpp"
#include "parallel.hpp"

namespace cloneforge::pipeline {
namespace {

using nlohmann::ordered_json;

std::string format_double(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const auto r = std::from_chars(value.data(), value.data() + value.size(), out);
  if (r.ec != std::errc() || r.ptr != value.data() + value.size()) {
    throw Error("config: invalid value for " + key + ": '" + value + "'");
  }
  return out;
}

std::vector<Language> parse_languages(const std::string& value) {
  std::vector<Language> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto lang = language_from_name(trim(item));
    if (!lang) throw Error("config: unknown language '" + trim(item) + "'");
    if (std::find(out.begin(), out.end(), *lang) == out.end()) out.push_back(*lang);
  }
  if (out.empty()) throw Error("config: languages must not be empty");
  return out;
}

void validate(const RunConfig& c) {
  if (c.vocab_size <= tokenizer::SubwordModel::kBaseSymbols) throw Error("config: vocab_size must exceed 256");
  if (c.max_len < 3) throw Error("config: max_len must be at least 3");
  if (!(c.mask_rate >= 0.0 && c.mask_rate <= 1.0)) throw Error("config: mask_rate must lie in [0, 1]");
  if (!(c.tau > 0.0)) throw Error("config: tau must be positive");
  if (c.toy_dim == 0 || c.toy_batch == 0) throw Error("config: toy_dim and toy_batch must be positive");
  if (!(c.toy_lr > 0.0)) throw Error("config: toy_lr must be positive");
  if (!(c.eval_fraction > 0.0 && c.eval_fraction < 1.0)) throw Error("config: eval_fraction must lie in (0, 1)");
  if (c.map_r == 0) throw Error("config: map_r must be positive");
}

ordered_json labeled_json(const LabeledText& t) {
  return ordered_json{{"text", t.text}, {"tokens", t.tokens}, {"labels", t.labels}};
}

LabeledText labeled_from_json(const nlohmann::json& j) {
  LabeledText t;
  t.text = j.at("text").get<std::string>();
  t.tokens = j.at("tokens").get<std::vector<std::string>>();
  t.labels = j.at("labels").get<std::vector<std::string>>();
  if (t.tokens.size() != t.labels.size()) throw Error("triplet record: tokens and labels differ in length");
  return t;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Outcome of augmenting one function: a triplet or a skip reason.
struct Slot {
  std::optional<TripletRecord> triplet;
  std::string reason;
};

Slot augment_one(const ast::SourceFunction& fn, std::uint64_t run_seed,
                 std::span<const std::string> vocab) {
  Slot slot;
  const std::uint64_t seed = function_seed(run_seed, fn.id);
  TripletRecord t;
  t.id = fn.id;
  t.language = fn.language;
  t.seed = seed;
  try {
    t.original = label_text(fn.language, fn.text);
  } catch (const ast::ParseError&) {
    slot.reason = "parse_error";
    return slot;
  }
  clone::CloneOptions options;
  options.vocabulary = vocab;
  clone::CloneResult c;
  try {
    c = clone::generate_clone(fn, mix_seed(seed, 1), options);
  } catch (const clone::NoApplicableTransform&) {
    slot.reason = "no_clone";
    return slot;
  } catch (const clone::TransformFailed&) {
    slot.reason = "no_clone";
    return slot;
  }
  deviant::DeviantResult d;
  try {
    d = deviant::generate_deviant(fn, mix_seed(seed, 2));
  } catch (const deviant::NoApplicableBug&) {
    slot.reason = "no_deviant";
    return slot;
  } catch (const deviant::InjectionFailed&) {
    slot.reason = "no_deviant";
    return slot;
  }
  if (c.text == fn.text || d.text == fn.text || c.text == d.text) {
    slot.reason = "degenerate";
    return slot;
  }
  try {
    t.clone = label_text(fn.language, c.text);
    t.deviant = label_text(fn.language, d.text);
  } catch (const ast::ParseError&) {
    // Generators only return parseable text; a failure here is a generator bug
    // and is counted rather than hidden.
    slot.reason = "generated_parse_error";
    return slot;
  }
  t.transforms = std::move(c.applied);
  t.bug = std::move(d.bug);
  slot.triplet = std::move(t);
  return slot;
}

std::vector<std::int32_t> subtoken_ids(const tokenizer::SubwordModel& model,
                                       const std::vector<std::string>& tokens, std::size_t max_len) {
  const std::vector<std::int32_t> no_labels(tokens.size(), labels::LabelVocab::kPad);
  return tokenizer::encode(model, tokens, no_labels, max_len).ids;
}

bool held_out(const std::string& id, std::uint64_t seed, double fraction) {
  const std::uint64_t h = mix_seed(seed ^ 0x5eedULL, fnv1a(id));
  return static_cast<double>(h % 1000000) < fraction * 1e6;
}

std::string iso_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ordered_json zero_shot_json(const eval::ZeroShotStudy& s) {
  return ordered_json{{"triplets", s.triplets},
                      {"avg_clone_sim", s.avg_clone_sim},
                      {"avg_deviant_sim", s.avg_deviant_sim},
                      {"avg_random_sim", s.avg_random_sim},
                      {"top1_clone_pct", s.top1_clone},
                      {"top1_deviant_pct", s.top1_deviant},
                      {"top1_random_pct", s.top1_random}};
}

ordered_json config_to_json(const RunConfig& c) {
  std::vector<std::string> langs;
  for (Language l : c.languages) langs.emplace_back(to_string(l));
  return ordered_json{{"seed", c.seed},
                      {"languages", langs},
                      {"vocab_size", c.vocab_size},
                      {"max_len", c.max_len},
                      {"mask_rate", c.mask_rate},
                      {"tau", c.tau},
                      {"lambda_mlm", c.lambdas.mlm},
                      {"lambda_ltsp", c.lambdas.ltsp},
                      {"lambda_clr", c.lambdas.clr},
                      {"toy_dim", c.toy_dim},
                      {"toy_steps", c.toy_steps},
                      {"toy_lr", c.toy_lr},
                      {"toy_batch", c.toy_batch},
                      {"eval_fraction", c.eval_fraction},
                      {"map_r", c.map_r},
                      {"max_function_bytes", c.max_function_bytes}};
}

}  // namespace

std::string RunConfig::to_text() const {
  std::string langs;
  for (Language l : languages) langs += (langs.empty() ? "" : ",") + std::string(to_string(l));
  std::ostringstream out;
  out << "seed=" << seed << "\n"
      << "languages=" << langs << "\n"
      << "vocab_size=" << vocab_size << "\n"
      << "max_len=" << max_len << "\n"
      << "mask_rate=" << format_double(mask_rate) << "\n"
      << "tau=" << format_double(tau) << "\n"
      << "lambda_mlm=" << format_double(lambdas.mlm) << "\n"
      << "lambda_ltsp=" << format_double(lambdas.ltsp) << "\n"
      << "lambda_clr=" << format_double(lambdas.clr) << "\n"
      << "toy_dim=" << toy_dim << "\n"
      << "toy_steps=" << toy_steps << "\n"
      << "toy_lr=" << format_double(toy_lr) << "\n"
      << "toy_batch=" << toy_batch << "\n"
      << "eval_fraction=" << format_double(eval_fraction) << "\n"
      << "map_r=" << map_r << "\n"
      << "max_function_bytes=" << max_function_bytes << "\n"
      << "threads=" << threads << "\n";
  return out.str();
}

RunConfig parse_config(std::string_view text) {
  RunConfig c;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error("config line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "seed") c.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "languages") c.languages = parse_languages(value);
    else if (key == "vocab_size") c.vocab_size = parse_number<std::size_t>(key, value);
    else if (key == "max_len") c.max_len = parse_number<std::size_t>(key, value);
    else if (key == "mask_rate") c.mask_rate = parse_number<double>(key, value);
    else if (key == "tau") c.tau = parse_number<double>(key, value);
    else if (key == "lambda_mlm") c.lambdas.mlm = parse_number<double>(key, value);
    else if (key == "lambda_ltsp") c.lambdas.ltsp = parse_number<double>(key, value);
    else if (key == "lambda_clr") c.lambdas.clr = parse_number<double>(key, value);
    else if (key == "toy_dim") c.toy_dim = parse_number<std::size_t>(key, value);
    else if (key == "toy_steps") c.toy_steps = parse_number<std::size_t>(key, value);
    else if (key == "toy_lr") c.toy_lr = parse_number<double>(key, value);
    else if (key == "toy_batch") c.toy_batch = parse_number<std::size_t>(key, value);
    else if (key == "eval_fraction") c.eval_fraction = parse_number<double>(key, value);
    else if (key == "map_r") c.map_r = parse_number<std::size_t>(key, value);
    else if (key == "max_function_bytes") c.max_function_bytes = parse_number<std::size_t>(key, value);
    else if (key == "threads") c.threads = parse_number<std::size_t>(key, value);
    else throw Error("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  validate(c);
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

LabeledText label_text(Language language, std::string text) {
  const ast::SyntaxTree tree = ast::parse(language, text);
  LabeledText out;
  out.tokens = ast::token_texts(tree);
  for (const labels::AstLabel& l : labels::label_sequence(tree)) out.labels.push_back(l.rendered());
  out.text = std::move(text);
  return out;
}

std::string to_json_line(const TripletRecord& t) {
  ordered_json j;
  j["id"] = t.id;
  j["language"] = std::string(to_string(t.language));
  j["seed"] = t.seed;
  j["original"] = labeled_json(t.original);
  j["clone"] = labeled_json(t.clone);
  j["deviant"] = labeled_json(t.deviant);
  ordered_json transforms = ordered_json::array();
  for (const clone::AppliedTransform& a : t.transforms) {
    transforms.push_back(ordered_json{{"kind", std::string(clone::to_string(a.kind))},
                                      {"span", {a.site.start, a.site.end}},
                                      {"detail", a.detail}});
  }
  j["transforms"] = std::move(transforms);
  j["bug"] = ordered_json{{"kind", std::string(deviant::to_string(t.bug.kind))},
                          {"span", {t.bug.site.start, t.bug.site.end}},
                          {"before", t.bug.before},
                          {"after", t.bug.after}};
  return j.dump();
}

TripletRecord triplet_from_json(std::string_view line) {
  TripletRecord t;
  try {
    const auto j = nlohmann::json::parse(line);
    t.id = j.at("id").get<std::string>();
    const auto lang = language_from_name(j.at("language").get<std::string>());
    if (!lang) throw Error("triplet record: unknown language");
    t.language = *lang;
    t.seed = j.at("seed").get<std::uint64_t>();
    t.original = labeled_from_json(j.at("original"));
    t.clone = labeled_from_json(j.at("clone"));
    t.deviant = labeled_from_json(j.at("deviant"));
    for (const auto& a : j.at("transforms")) {
      clone::AppliedTransform applied{};
      const std::string kind = a.at("kind").get<std::string>();
      bool known = false;
      for (clone::CloneTransformKind k : clone::kAllTransformKinds) {
        if (clone::to_string(k) == kind) {
          applied.kind = k;
          known = true;
        }
      }
      if (!known) throw Error("triplet record: unknown transform '" + kind + "'");
      applied.site = {a.at("span").at(0).get<std::size_t>(), a.at("span").at(1).get<std::size_t>()};
      applied.detail = a.at("detail").get<std::string>();
      t.transforms.push_back(std::move(applied));
    }
    const auto& b = j.at("bug");
    const std::string kind = b.at("kind").get<std::string>();
    bool known = false;
    for (deviant::BugKind k : deviant::kAllBugKinds) {
      if (deviant::to_string(k) == kind) {
        t.bug.kind = k;
        known = true;
      }
    }
    if (!known) throw Error("triplet record: unknown bug kind '" + kind + "'");
    t.bug.site = {b.at("span").at(0).get<std::size_t>(), b.at("span").at(1).get<std::size_t>()};
    t.bug.before = b.at("before").get<std::string>();
    t.bug.after = b.at("after").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed triplet record: ") + e.what());
  }
  return t;
}

void write_triplets(std::ostream& out, std::span<const TripletRecord> triplets) {
  for (const TripletRecord& t : triplets) out << to_json_line(t) << '\n';
}

std::vector<TripletRecord> read_triplets(std::istream& in) {
  std::vector<TripletRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(triplet_from_json(line));
    } catch (const Error& e) {
      throw Error("triplets line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<TripletRecord> read_triplets_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  return read_triplets(in);
}

std::uint64_t function_seed(std::uint64_t run_seed, std::string_view id) {
  return mix_seed(run_seed, fnv1a(id));
}

std::string AugmentResult::summary_json() const {
  ordered_json j;
  j["inputs"] = inputs;
  j["triplets"] = triplets.size();
  ordered_json skips = ordered_json::object();
  std::size_t skipped_total = 0;
  for (const auto& [reason, n] : skipped) {
    skips[reason] = n;
    skipped_total += n;
  }
  j["skipped"] = std::move(skips);
  ordered_json rates = ordered_json::object();
  for (const auto& [reason, n] : skipped) {
    rates[reason] = inputs == 0 ? 0.0 : static_cast<double>(n) / static_cast<double>(inputs);
  }
  j["skip_rates"] = std::move(rates);
  j["accounted"] = skipped_total + triplets.size() == inputs;
  return j.dump(2) + "\n";
}

AugmentResult augment(std::span<const ast::SourceFunction> functions, std::uint64_t seed,
                      std::span<const std::string> identifier_vocab, std::size_t threads) {
  std::vector<Slot> slots(functions.size());
  detail::parallel_for(functions.size(), threads, [&](std::size_t i) {
    slots[i] = augment_one(functions[i], seed, identifier_vocab);
  });
  AugmentResult out;
  out.inputs = functions.size();
  for (Slot& s : slots) {
    if (s.triplet) {
      out.triplets.push_back(std::move(*s.triplet));
    } else {
      ++out.skipped[s.reason];
    }
  }
  return out;
}

AugmentResult augment(std::span<const corpus::CorpusFunction> functions, std::uint64_t seed,
                      std::span<const std::string> identifier_vocab, std::size_t threads) {
  std::vector<ast::SourceFunction> plain;
  plain.reserve(functions.size());
  for (const corpus::CorpusFunction& f : functions) plain.push_back(f.function);
  return augment(plain, seed, identifier_vocab, threads);
}

std::vector<std::vector<std::size_t>> batch_stream(std::size_t triplet_count, std::size_t n,
                                                   std::uint64_t seed) {
  if (n == 0) throw Error("batch size must be positive");
  if (triplet_count < n) {
    throw Error("need at least " + std::to_string(n) + " triplets for one batch, got " +
                std::to_string(triplet_count));
  }
  return objective::batch_partition(triplet_count, n, seed);
}

objective::ToyTriplet toy_triplet(const tokenizer::SubwordModel& model, const TripletRecord& t,
                                  std::size_t max_len) {
  return {subtoken_ids(model, t.original.tokens, max_len), subtoken_ids(model, t.clone.tokens, max_len),
          subtoken_ids(model, t.deviant.tokens, max_len)};
}

EndToEndReport run_end_to_end(const RunConfig& config, const EndToEndInputs& inputs) {
  validate(config);
  const auto started = std::chrono::steady_clock::now();
  const std::string started_at = iso_now();
  ordered_json metrics;

  // Corpus.
  std::vector<corpus::CorpusFunction> functions = inputs.corpus;
  if (!inputs.roots.empty()) {
    corpus::IngestOptions opts;
    opts.languages = config.languages;
    opts.max_function_bytes = config.max_function_bytes;
    opts.threads = config.threads;
    corpus::IngestResult ingested = corpus::ingest(inputs.roots, opts);
    metrics["corpus"] = nlohmann::ordered_json::parse(ingested.manifest.to_json());
    for (auto& f : ingested.functions) functions.push_back(std::move(f));
  } else {
    std::erase_if(functions, [&](const corpus::CorpusFunction& f) {
      return std::find(config.languages.begin(), config.languages.end(), f.function.language) ==
             config.languages.end();
    });
    std::ostringstream bytes;
    corpus::write_corpus(bytes, functions);
    metrics["corpus"] = ordered_json{{"functions", functions.size()},
                                     {"corpus_sha256", sha256_hex(bytes.str())}};
  }
  if (functions.empty()) throw Error("end-to-end run has no functions to work on");

  // Split and augmentation.
  std::vector<corpus::CorpusFunction> train_fns, eval_fns;
  for (auto& f : functions) {
    (held_out(f.function.id, config.seed, config.eval_fraction) ? eval_fns : train_fns).push_back(f);
  }
  const std::vector<corpus::IdentifierCount> id_vocab = corpus::build_identifier_vocab(train_fns);
  const std::vector<std::string> id_names = corpus::identifier_names(id_vocab);
  const AugmentResult train_aug = augment(train_fns, config.seed, id_names, config.threads);
  const AugmentResult eval_aug = augment(eval_fns, config.seed, id_names, config.threads);
  metrics["split"] = ordered_json{{"train_functions", train_fns.size()}, {"eval_functions", eval_fns.size()}};
  metrics["augment"] = ordered_json{{"train", nlohmann::ordered_json::parse(train_aug.summary_json())},
                                    {"eval", nlohmann::ordered_json::parse(eval_aug.summary_json())}};
  metrics["identifier_vocab_size"] = id_vocab.size();

  // Tokenizer.
  std::vector<std::vector<std::string>> streams;
  for (const TripletRecord& t : train_aug.triplets) {
    streams.push_back(t.original.tokens);
    streams.push_back(t.clone.tokens);
    streams.push_back(t.deviant.tokens);
  }
  if (streams.empty()) throw Error("no training triplets; the corpus is too small or unsuitable");
  const tokenizer::SubwordModel model = tokenizer::train_subword(streams, config.vocab_size);
  metrics["tokenizer"] = ordered_json{{"target_vocab", config.vocab_size},
                                      {"learned_symbols", model.learned_size()},
                                      {"vocab_size", model.vocab_size()},
                                      {"merges", model.merges().size()},
                                      {"reached_target", model.learned_size() >= config.vocab_size},
                                      {"corpus_sha256", model.corpus_hash()},
                                      {"model_sha256", sha256_hex(model.to_text())}};

  // Labels, encoding and masking.
  std::vector<std::string> train_labels;
  for (const TripletRecord& t : train_aug.triplets) {
    for (const LabeledText* lt : {&t.original, &t.clone, &t.deviant}) {
      train_labels.insert(train_labels.end(), lt->labels.begin(), lt->labels.end());
    }
  }
  const labels::LabelVocab label_vocab(train_labels);
  std::size_t sequences = 0, misaligned = 0, sharing_violations = 0, truncated = 0;
  std::size_t masked_total = 0, mask_violations = 0, content_total = 0;
  std::size_t unk_train = 0, unk_eval = 0;
  double mlm_uniform = 0.0, ltsp_uniform = 0.0;
  const double log_v = std::log(static_cast<double>(model.vocab_size()));
  const double log_l = std::log(static_cast<double>(label_vocab.size()));
  auto process = [&](const AugmentResult& aug, std::size_t& unk, bool train) {
    for (const TripletRecord& t : aug.triplets) {
      for (const LabeledText* lt : {&t.original, &t.clone, &t.deviant}) {
        std::vector<std::int32_t> label_ids;
        for (const std::string& l : lt->labels) {
          const std::int32_t id = label_vocab.id_of(l);
          unk += id == labels::LabelVocab::kUnk ? 1 : 0;
          label_ids.push_back(id);
        }
        const tokenizer::TokenizedSequence seq =
            tokenizer::encode(model, lt->tokens, label_ids, config.max_len);
        ++sequences;
        truncated += seq.truncated ? 1 : 0;
        if (seq.ids.size() != seq.label_ids.size()) ++misaligned;
        for (std::size_t p = 1; p + 1 < seq.ids.size(); ++p) {
          if (seq.label_ids[p] != label_ids[static_cast<std::size_t>(seq.token_index[p])]) {
            ++sharing_violations;
          }
        }
        const std::uint64_t mseed = mix_seed(t.seed, 3 + static_cast<std::uint64_t>(lt - &t.original));
        const tokenizer::TokenizedSequence masked = tokenizer::mask_for_mlm(seq, mseed, config.mask_rate);
        const std::size_t k = seq.content_length();
        content_total += k;
        masked_total += masked.mask_positions.size();
        if (masked.mask_positions.size() != tokenizer::mask_count(k, config.mask_rate)) ++mask_violations;
        if (train) {
          mlm_uniform += static_cast<double>(masked.mask_positions.size()) * log_v;
          ltsp_uniform += static_cast<double>(k) * log_l;
        }
      }
    }
  };
  process(train_aug, unk_train, true);
  process(eval_aug, unk_eval, false);
  const std::size_t train_sequences = 3 * train_aug.triplets.size();
  metrics["labels"] = ordered_json{{"vocab_size", label_vocab.size()},
                                   {"sequences", sequences},
                                   {"misaligned", misaligned},
                                   {"sharing_violations", sharing_violations},
                                   {"unk_train", unk_train},
                                   {"unk_eval", unk_eval},
                                   {"truncated", truncated}};
  ordered_json masking{{"mask_rate", config.mask_rate},
                       {"sequences", sequences},
                       {"content_positions", content_total},
                       {"masked_positions", masked_total},
                       {"contract_violations", mask_violations}};
  masking["status"] = masked_total == 0 ? "empty-mask" : "ok";
  metrics["masking"] = std::move(masking);

  // Toy contrastive training.
  std::vector<objective::ToyTriplet> train_toy, eval_toy;
  for (const TripletRecord& t : train_aug.triplets) train_toy.push_back(toy_triplet(model, t, config.max_len));
  for (const TripletRecord& t : eval_aug.triplets) eval_toy.push_back(toy_triplet(model, t, config.max_len));
  objective::ToyConfig toy;
  toy.dim = config.toy_dim;
  toy.steps = config.toy_steps;
  toy.lr = config.toy_lr;
  toy.batch = std::min(config.toy_batch, train_toy.size());
  toy.tau = config.tau;
  toy.seed = mix_seed(config.seed, 7);
  const objective::ToyEncoder trained = objective::toy_train(train_toy, model.vocab_size(), toy);
  objective::ToyConfig untrained_cfg = toy;
  untrained_cfg.steps = 0;
  const objective::ToyEncoder untrained = objective::toy_train(train_toy, model.vocab_size(), untrained_cfg);

  // Eq. 4 wiring on the training split: uniform-predictor MLM/LTSP per
  // sequence and the toy encoder's contrastive loss before and after training.
  const double mlm_avg = train_sequences ? mlm_uniform / static_cast<double>(train_sequences) : 0.0;
  const double ltsp_avg = train_sequences ? ltsp_uniform / static_cast<double>(train_sequences) : 0.0;
  const double clr_initial = trained.loss_curve.empty() ? 0.0 : trained.loss_curve.front();
  const double clr_final = trained.loss_curve.empty() ? 0.0 : trained.loss_curve.back();
  const objective::LossBreakdown before = objective::combined_loss(mlm_avg, ltsp_avg, clr_initial, config.lambdas);
  const objective::LossBreakdown after = objective::combined_loss(mlm_avg, ltsp_avg, clr_final, config.lambdas);
  ordered_json losses{{"lambdas", {{"mlm", config.lambdas.mlm}, {"ltsp", config.lambdas.ltsp}, {"clr", config.lambdas.clr}}},
                      {"tau", config.tau},
                      {"mlm_uniform_per_sequence", mlm_avg},
                      {"ltsp_uniform_per_sequence", ltsp_avg},
                      {"clr_initial", clr_initial},
                      {"clr_final", clr_final},
                      {"combined_initial", before.combined},
                      {"combined_final", after.combined}};
  losses["mlm_status"] = masked_total == 0 ? "empty-mask" : "ok";
  metrics["objective"] = std::move(losses);
  metrics["toy"] = ordered_json{{"dim", toy.dim},        {"steps", toy.steps},
                                {"lr", toy.lr},          {"batch", toy.batch},
                                {"seed", toy.seed},      {"train_triplets", train_toy.size()},
                                {"encoder_sha256", sha256_hex(trained.to_text())}};

  // Zero-shot study on held-out triplets.
  auto study = [&](const objective::ToyEncoder& enc) -> ordered_json {
    if (eval_toy.size() < 2) return ordered_json{{"status", "too-few-eval-triplets"}, {"triplets", eval_toy.size()}};
    std::vector<eval::EmbeddedTriplet> emb;
    for (const auto& t : eval_toy) emb.push_back({enc.encode(t.original), enc.encode(t.clone), enc.encode(t.deviant)});
    ordered_json j = zero_shot_json(eval::zero_shot_study(emb, 2));
    j["below_recommended_size"] = eval_toy.size() < eval::kMinZeroShotTriplets;
    return j;
  };
  metrics["zero_shot"] = ordered_json{{"trained", study(trained)}, {"untrained", study(untrained)}};

  // MAP@R: each held-out function with map_r extra clones forms one group.
  std::vector<std::pair<std::string, std::vector<std::vector<std::int32_t>>>> groups;
  for (const corpus::CorpusFunction& f : eval_fns) {
    std::vector<std::vector<std::int32_t>> members;
    try {
      members.push_back(subtoken_ids(model, label_text(f.function.language, f.function.text).tokens, config.max_len));
      clone::CloneOptions copts;
      copts.vocabulary = id_names;
      const std::uint64_t fseed = function_seed(config.seed, f.function.id);
      for (std::size_t k = 0; k < config.map_r; ++k) {
        const clone::CloneResult c = clone::generate_clone(f.function, mix_seed(fseed, 100 + k), copts);
        members.push_back(subtoken_ids(model, label_text(f.function.language, c.text).tokens, config.max_len));
      }
    } catch (const Error&) {
      continue;
    }
    groups.emplace_back(f.function.id, std::move(members));
  }
  auto map_for = [&](const objective::ToyEncoder& enc) -> ordered_json {
    if (groups.size() < 2) return ordered_json{{"status", "too-few-groups"}, {"groups", groups.size()}};
    eval::RetrievalDataset ds;
    ds.r = config.map_r;
    for (const auto& [id, members] : groups) {
      for (std::size_t k = 0; k < members.size(); ++k) {
        ds.items.push_back({id + "#" + std::to_string(k), enc.encode(members[k]), id});
      }
    }
    return ordered_json{{"r", ds.r}, {"groups", groups.size()}, {"map_at_r", eval::map_at_r(ds)}};
  };
  metrics["retrieval"] = ordered_json{{"trained", map_for(trained)}, {"untrained", map_for(untrained)}};

  const ordered_json config_json = config_to_json(config);
  ordered_json report;
  report["config"] = config_json;
  report["defaults"] = ordered_json{{"tau", objective::kDefaultTau},
                                    {"lambdas", {{"mlm", objective::Lambdas{}.mlm},
                                                 {"ltsp", objective::Lambdas{}.ltsp},
                                                 {"clr", objective::Lambdas{}.clr}}},
                                    {"vocab_size", tokenizer::kDefaultVocabSize},
                                    {"max_len", tokenizer::kMaxSequenceLength},
                                    {"mask_rate", tokenizer::kDefaultMaskRate}};
  report["metrics"] = metrics;
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  report["timing"] = ordered_json{{"started_at", started_at}, {"seconds", seconds}};

  EndToEndReport out;
  out.metrics_json = metrics.dump(2) + "\n";
  out.report_json = report.dump(2) + "\n";
  return out;
}

}  // namespace cloneforge::pipeline

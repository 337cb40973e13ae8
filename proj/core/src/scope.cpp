#include "cloneforge/scope.hpp"

#include <algorithm>
#include <set>

#include "cloneforge/syntax.hpp"

namespace cloneforge::ast {

namespace {

bool is_parameter_kind(const AstNode& n) {
  return n.is("parameter_declaration") || n.is("optional_parameter_declaration") ||
         n.is("formal_parameter") || n.is("spread_parameter") ||
         n.is("catch_formal_parameter") || n.is("variadic_parameter_declaration");
}

bool is_declarator_kind(const AstNode& n) {
  return n.is("init_declarator") || n.is("pointer_declarator") || n.is("array_declarator") ||
         n.is("reference_declarator") || n.is("parenthesized_declarator") ||
         n.is("function_declarator") || n.is("attributed_declarator") ||
         n.is("variable_declarator");
}

/// The construct that owns a parameter's scope: a function, lambda or catch
/// clause. Parameters of prototypes and function-pointer types yield nullptr.
const AstNode* parameter_owner(const AstNode& param) {
  const AstNode* p = param.parent;
  if (p == nullptr) return nullptr;
  if (p->is("catch_clause")) return p;
  if (p->is("formal_parameters") || p->is("parameter_list") || p->is("inferred_parameters")) {
    p = p->parent;
  }
  if (p == nullptr) return nullptr;
  if (p->is("catch_clause") || p->is("lambda_expression") || is_function(*p)) return p;
  if (p->is("abstract_function_declarator") && p->parent != nullptr &&
      p->parent->is("lambda_expression")) {
    return p->parent;
  }
  if (p->is("function_declarator")) {
    const AstNode* up = p->parent;
    while (up != nullptr && is_declarator_kind(*up)) up = up->parent;
    if (up != nullptr && is_function(*up)) return up;
  }
  return nullptr;
}

const AstNode* enclosing_scope(const AstNode& n) {
  for (const AstNode* p = n.parent; p != nullptr; p = p->parent) {
    if (is_scope_boundary(*p)) return p;
  }
  return nullptr;
}

bool is_const_qualified(const SyntaxTree& tree, const AstNode& decl_node) {
  for (const AstNode* c : decl_node.children) {
    if (c->is("type_qualifier") && tree.text(*c) == "const") return true;
    if (c->is("modifiers")) {
      for (const AstNode* m : c->children) {
        if (m->is("final")) return true;
      }
    }
  }
  return false;
}

}  // namespace

std::vector<const AstNode*> ScopeInfo::uses_of(std::size_t decl) const {
  std::vector<const AstNode*> out;
  for (const IdentifierUse& u : uses_) {
    if (u.declaration == decl) out.push_back(u.node);
  }
  return out;
}

std::vector<const AstNode*> ScopeInfo::use_sites(std::string_view name) const {
  std::vector<const AstNode*> out;
  for (const IdentifierUse& u : uses_) {
    if (u.name == name) out.push_back(u.node);
  }
  return out;
}

bool ScopeInfo::reachable(std::string_view name, std::size_t site) const {
  return resolve(name, site).has_value();
}

std::optional<std::size_t> ScopeInfo::resolve(std::string_view name, std::size_t site) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  std::optional<std::size_t> best;
  for (std::size_t idx : it->second) {
    const Declaration& d = declarations_[idx];
    const bool at_unit_end = d.scope->parent == nullptr && d.scope->span.end == site;
    if (!d.scope->span.contains(site) && !at_unit_end) continue;
    if (site < d.visible_from) continue;
    if (!best) {
      best = idx;
      continue;
    }
    const Declaration& b = declarations_[*best];
    const bool narrower = d.scope->span.size() < b.scope->span.size();
    const bool same_later = d.scope == b.scope && d.visible_from > b.visible_from;
    if (narrower || same_later) best = idx;
  }
  return best;
}

std::vector<std::size_t> ScopeInfo::visible_at(std::size_t site) const {
  std::vector<std::size_t> out;
  for (const auto& [name, indices] : by_name_) {
    if (auto r = resolve(name, site)) out.push_back(*r);
  }
  return out;
}

std::optional<std::size_t> ScopeInfo::binding_of(const AstNode& identifier) const {
  if (auto it = decl_of_name_node_.find(identifier.index); it != decl_of_name_node_.end()) {
    return it->second;
  }
  if (auto it = use_index_.find(identifier.index); it != use_index_.end()) {
    return uses_[it->second].declaration;
  }
  return std::nullopt;
}

ScopeInfo scope_of(const SyntaxTree& tree) {
  ScopeInfo info;
  const AstNode& root = tree.root();

  auto add = [&](const AstNode* name, const AstNode* decl_node, const AstNode* scope,
                 DeclKind kind) {
    if (name == nullptr || !name->is("identifier") || scope == nullptr) return;
    if (info.decl_of_name_node_.contains(name->index)) return;
    Declaration d;
    d.name = std::string(tree.text(*name));
    d.name_node = name;
    d.decl_node = decl_node;
    d.scope = scope;
    d.kind = kind;
    d.visible_from = name->span.end;
    info.decl_of_name_node_[name->index] = info.declarations_.size();
    info.by_name_[d.name].push_back(info.declarations_.size());
    info.declarations_.push_back(std::move(d));
  };

  for (const AstNode& n : tree.nodes()) {
    if (is_function(n)) {
      add(function_name(n), &n, &root, DeclKind::Function);
      continue;
    }
    if (is_parameter_kind(n)) {
      const AstNode* owner = parameter_owner(n);
      if (owner == nullptr) continue;
      for (const AstNode* d : declarators(n)) {
        add(declarator_name(d), &n, owner, DeclKind::Parameter);
      }
      continue;
    }
    if (n.is("lambda_expression")) {
      const AstNode* params = n.child("parameters");
      if (params != nullptr && params->is("identifier")) {
        add(params, &n, &n, DeclKind::Parameter);
      } else if (params != nullptr && params->is("inferred_parameters")) {
        for (const AstNode* c : params->children) {
          if (c->is("identifier")) add(c, &n, &n, DeclKind::Parameter);
        }
      }
      if (n.child("captures") != nullptr) {
        info.unsupported_.push_back("lambda_capture@" + std::to_string(n.span.start));
      }
      continue;
    }
    if (is_local_declaration(n)) {
      const AstNode* scope = enclosing_scope(n);
      for (const AstNode* d : declarators(n)) {
        if (d->is("structured_binding_declarator")) {
          for (const AstNode* c : d->children) {
            if (c->is("identifier")) add(c, &n, scope, DeclKind::Local);
          }
          continue;
        }
        add(declarator_name(d), &n, scope, DeclKind::Local);
      }
      continue;
    }
    if (n.is("enhanced_for_statement")) {
      add(n.child("name"), &n, &n, DeclKind::Local);
      continue;
    }
    if (n.is("for_range_loop")) {
      add(declarator_name(n.child("declarator")), &n, &n, DeclKind::Local);
      continue;
    }
    if (n.is("resource") && n.child("name") != nullptr) {
      add(n.child("name"), &n, enclosing_scope(n), DeclKind::Local);
      continue;
    }
    if (n.is("enumerator")) {
      bool in_function = false;
      for (const AstNode* p = n.parent; p != nullptr && !in_function; p = p->parent) {
        in_function = is_function(*p);
      }
      if (in_function) add(n.child("name"), &n, enclosing_scope(n), DeclKind::Local);
      continue;
    }
    if (n.is("local_class_declaration") || n.is("class_specifier") ||
        n.is("struct_specifier") || n.is("goto_statement") || n.is("preproc_def") ||
        n.is("preproc_function_def") || n.is("instanceof_expression")) {
      bool in_function = false;
      for (const AstNode* p = n.parent; p != nullptr && !in_function; p = p->parent) {
        in_function = is_function(*p);
      }
      if (in_function && (n.child("body") != nullptr || n.is("goto_statement") ||
                          n.is("preproc_def") || n.is("preproc_function_def") ||
                          n.child("name") != nullptr)) {
        info.unsupported_.push_back(std::string(n.kind) + "@" + std::to_string(n.span.start));
      }
    }
  }

  for (const AstNode* id : identifier_uses(root)) {
    if (info.decl_of_name_node_.contains(id->index)) continue;
    // Parameter names of prototypes and function-pointer types are not uses.
    bool in_foreign_params = false;
    for (const AstNode* p = id->parent; p != nullptr; p = p->parent) {
      if (is_parameter_kind(*p)) {
        in_foreign_params = parameter_owner(*p) == nullptr && id->field != "value";
        break;
      }
      if (is_block(*p) || is_function(*p)) break;
    }
    if (in_foreign_params) continue;
    IdentifierUse use;
    use.name = std::string(tree.text(*id));
    use.node = id;
    use.declaration = info.resolve(tree.text(*id), id->span.start);
    info.use_index_[id->index] = info.uses_.size();
    info.uses_.push_back(use);
  }
  return info;
}

const AstNode* declarator_of(const Declaration& decl) {
  const AstNode* top = nullptr;
  for (const AstNode* p = decl.name_node->parent; p != nullptr && p != decl.decl_node;
       p = p->parent) {
    if (!is_declarator_kind(*p)) break;
    top = p;
  }
  return top;
}

const AstNode* declared_type_node(const Declaration& decl) {
  if (decl.decl_node == nullptr) return nullptr;
  return decl.decl_node->child("type");
}

std::string declared_type_text(const SyntaxTree& tree, const Declaration& decl) {
  std::string out;
  if (decl.decl_node == nullptr) return out;
  for (const AstNode* c : decl.decl_node->children) {
    if (c->is("type_qualifier")) {
      out += tree.text(*c);
      out += ' ';
    }
  }
  if (const AstNode* t = declared_type_node(decl)) out += tree.text(*t);
  for (const AstNode* p = decl.name_node->parent; p != nullptr && p != decl.decl_node;
       p = p->parent) {
    if (p->is("pointer_declarator")) out += "*";
    if (p->is("array_declarator")) out += "[]";
    if (p->is("reference_declarator")) out += "&";
    if (p->is("variable_declarator") && p->child("dimensions") != nullptr) out += "[]";
  }
  return out;
}

TypeCategory type_category(const SyntaxTree& tree, const Declaration& decl) {
  for (const AstNode* p = decl.name_node->parent; p != nullptr && p != decl.decl_node;
       p = p->parent) {
    if (p->is("pointer_declarator")) return TypeCategory::Pointer;
    if (p->is("array_declarator")) return TypeCategory::Array;
    if (p->is("reference_declarator")) return TypeCategory::Reference;
    if (p->is("variable_declarator") && p->child("dimensions") != nullptr) {
      return TypeCategory::Array;
    }
  }
  const AstNode* type = declared_type_node(decl);
  if (type == nullptr) return TypeCategory::Other;
  const std::string_view text = tree.text(*type);
  if (type->is("integral_type")) return TypeCategory::Integral;
  if (type->is("floating_point_type")) return TypeCategory::Floating;
  if (type->is("boolean_type")) return TypeCategory::Boolean;
  if (type->is("array_type")) return TypeCategory::Array;
  if (type->is("primitive_type")) {
    if (text == "float" || text == "double") return TypeCategory::Floating;
    if (text == "bool" || text == "_Bool") return TypeCategory::Boolean;
    if (text == "void") return TypeCategory::Other;
    return TypeCategory::Integral;
  }
  if (type->is("type_identifier") && text == "_Bool") return TypeCategory::Boolean;
  if (type->is("sized_type_specifier")) {
    return text.find("double") != std::string_view::npos ? TypeCategory::Floating
                                                         : TypeCategory::Integral;
  }
  return TypeCategory::Other;
}

std::vector<const AstNode*> independent_decls(const SyntaxTree& tree, const ScopeInfo& scope) {
  std::vector<const AstNode*> out;
  for (const AstNode& n : tree.nodes()) {
    if (!is_local_declaration(n)) continue;
    if (n.parent == nullptr || !is_block(*n.parent)) continue;
    bool independent = true;
    for (const AstNode* d : declarators(n)) {
      if (d->is("function_declarator") || d->is("structured_binding_declarator")) {
        independent = false;
        break;
      }
      if (has_side_effects(*d)) {
        independent = false;
        break;
      }
      const AstNode* name = declarator_name(d);
      for (const AstNode* id : identifier_uses(*d)) {
        if (id == name) continue;
        auto bound = scope.binding_of(*id);
        if (!bound) continue;
        const Declaration& target = scope.declarations()[*bound];
        if (target.kind == DeclKind::Function) continue;
        if (!is_const_qualified(tree, *target.decl_node)) {
          independent = false;
          break;
        }
      }
      if (!independent) break;
    }
    if (independent) out.push_back(&n);
  }
  return out;
}

}  // namespace cloneforge::ast

#include "clazy/lambda_list.hpp"

#include <algorithm>
#include <string>

#include "clazy/error.hpp"

namespace clazy {
namespace {

enum class Section { Required, Optional, Rest, Key };

[[noreturn]] void malformed(const std::string& why) {
  throw EvalError(ErrorKind::MalformedLambdaList, why);
}

Symbol parameter_name(const Form& form) {
  auto sym = form.symbol();
  if (!sym) malformed("parameter must be a symbol");
  if (sym->name().starts_with('&')) {
    malformed("unexpected lambda-list keyword " + std::string(sym->name()));
  }
  return *sym;
}

// `(name default supplied-p)` shape shared by &optional and &key entries;
// the first element is handled by the caller.
void parse_default_and_supplied(std::span<const Form> items, const Form*& default_form,
                                std::optional<Symbol>& supplied_p) {
  if (items.size() > 3) malformed("too many elements in parameter specifier");
  if (items.size() >= 2) default_form = &items[1];
  if (items.size() == 3) supplied_p = parameter_name(items[2]);
}

}  // namespace

LambdaList LambdaList::parse(const Form& form) {
  LambdaList ll;
  if (form.is_atom() && !form.datum().is_nil()) malformed("lambda list must be a list");

  const Symbol kOptional = Symbol::intern("&OPTIONAL");
  const Symbol kRest = Symbol::intern("&REST");
  const Symbol kKey = Symbol::intern("&KEY");

  Section section = Section::Required;
  bool rest_filled = false;
  for (const Form& item : form.items()) {
    if (auto sym = item.symbol(); sym && sym->name().starts_with('&')) {
      Section next;
      if (*sym == kOptional) next = Section::Optional;
      else if (*sym == kRest) next = Section::Rest;
      else if (*sym == kKey) next = Section::Key;
      else malformed("unsupported lambda-list keyword " + std::string(sym->name()));
      if (next <= section) malformed("lambda-list keyword " + std::string(sym->name()) + " out of order");
      if (section == Section::Rest && !rest_filled) malformed("&rest requires a parameter name");
      section = next;
      if (section == Section::Key) ll.has_key_section = true;
      continue;
    }
    switch (section) {
      case Section::Required:
        ll.required.push_back(parameter_name(item));
        break;
      case Section::Optional: {
        if (item.is_atom()) {
          ll.optional.push_back({parameter_name(item), nullptr, std::nullopt});
          break;
        }
        OptionalParam p{parameter_name(item.items()[0]), nullptr, std::nullopt};
        parse_default_and_supplied(item.items(), p.default_form, p.supplied_p);
        ll.optional.push_back(p);
        break;
      }
      case Section::Rest:
        if (rest_filled) malformed("&rest takes exactly one parameter");
        ll.rest = parameter_name(item);
        rest_filled = true;
        break;
      case Section::Key: {
        if (item.is_atom()) {
          Symbol name = parameter_name(item);
          ll.keys.push_back({Keyword(name), name, nullptr, std::nullopt});
          break;
        }
        const Form& head = item.items()[0];
        KeywordParam p{Keyword::intern("X"), Symbol::intern("X"), nullptr, std::nullopt};
        if (head.is_list()) {
          // ((:external internal) default supplied-p)
          if (head.items().size() != 2 || !head.items()[0].datum().keyword() ||
              head.items()[0].is_list()) {
            malformed("keyword alias must be (:keyword name)");
          }
          p.key = *head.items()[0].datum().keyword();
          p.name = parameter_name(head.items()[1]);
        } else {
          p.name = parameter_name(head);
          p.key = Keyword(p.name);
        }
        parse_default_and_supplied(item.items(), p.default_form, p.supplied_p);
        ll.keys.push_back(p);
        break;
      }
    }
  }
  if (section == Section::Rest && !rest_filled) malformed("&rest requires a parameter name");

  std::vector<Symbol> names(ll.required);
  for (const auto& p : ll.optional) {
    names.push_back(p.name);
    if (p.supplied_p) names.push_back(*p.supplied_p);
  }
  if (ll.rest) names.push_back(*ll.rest);
  for (const auto& p : ll.keys) {
    names.push_back(p.name);
    if (p.supplied_p) names.push_back(*p.supplied_p);
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (std::find(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(i), names[i]) !=
        names.begin() + static_cast<std::ptrdiff_t>(i)) {
      malformed("duplicate parameter " + std::string(names[i].name()));
    }
  }
  for (std::size_t i = 0; i < ll.keys.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (ll.keys[i].key == ll.keys[j].key) {
        malformed("duplicate keyword :" + std::string(ll.keys[i].key.name()));
      }
    }
  }
  return ll;
}

}  // namespace clazy

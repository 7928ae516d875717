#include "membank/arch.hpp"

namespace membank {

std::string MemArchitecture::slug() const {
  switch (kind) {
    case ArchKind::MultiPort4R1W:
      return "4r1w";
    case ArchKind::MultiPort4R2W:
      return "4r2w";
    case ArchKind::MultiPort4R1W_VB:
      return "4r1w-vb";
    case ArchKind::Banked:
      break;
  }
  std::string s = "banked" + std::to_string(banked->num_banks);
  if (banked->mapping.kind == MapKind::BitSlice && banked->mapping.shift != 0)
    s += "-offset" + std::to_string(banked->mapping.shift);
  return s;
}

std::optional<MemArchitecture> MemArchitecture::from_slug(const std::string& slug) {
  if (slug == "4r1w") return multiport_4r1w();
  if (slug == "4r2w") return multiport_4r2w();
  if (slug == "4r1w-vb") return multiport_4r1w_vb();
  if (slug.rfind("banked", 0) != 0) return std::nullopt;
  std::string rest = slug.substr(6);
  uint32_t shift = 0;
  auto dash = rest.find("-offset");
  if (dash != std::string::npos) {
    shift = uint32_t(std::stoul(rest.substr(dash + 7)));
    rest = rest.substr(0, dash);
  }
  uint32_t banks;
  if (rest == "4") banks = 4;
  else if (rest == "8") banks = 8;
  else if (rest == "16") banks = 16;
  else return std::nullopt;
  uint32_t width = banks == 4 ? 2 : (banks == 8 ? 3 : 4);
  BankMapping map = shift ? BankMapping::bit_slice(shift, width) : BankMapping::lsb(width);
  return make_banked(banks, map);
}

std::string MemArchitecture::display_name() const {
  switch (kind) {
    case ArchKind::MultiPort4R1W:
      return "4R-1W";
    case ArchKind::MultiPort4R2W:
      return "4R-2W";
    case ArchKind::MultiPort4R1W_VB:
      return "4R-1W-VB";
    case ArchKind::Banked:
      break;
  }
  std::string s = std::to_string(banked->num_banks) + " Banks";
  if (banked->mapping.kind == MapKind::BitSlice && banked->mapping.shift != 0)
    s += " Offset";
  return s;
}

}  // namespace membank

// Coefficient tables of the built-in syzygies. Shared by the syzygy checks
// and by the K6 / I8 reconstruction, so each table is transcribed once.

#include <sym3inv/relation.hpp>

namespace sym3 {

namespace {

using Table = std::vector<std::pair<std::string_view, std::string_view>>;

// 6 J2 I8 = -I2^2 J2 K4 - I2^3 L4 + ... + 6 K4 K6, moved to one side.
const Table kI8Table = {
    {"6", "J2 I8"},       {"1", "I2^2 J2 K4"}, {"1", "I2^3 L4"},  {"-3", "I2 I4 L4"},
    {"3", "I2 J4 K4"},    {"-4", "J2 I4 K4"},  {"-2", "I2^2 J6"}, {"-3", "I2 J2 L6"},
    {"3", "L4 I6"},       {"6", "I4 J6"},      {"-3", "J4 L6"},   {"-6", "K4 K6"},
};

// (2 I2 J2 - 3 J4) K6 + ... = 0
const Table kK6Table = {
    {"2", "I2 J2 K6"},  {"1", "I2^2 J2 J4"}, {"-1", "I2 J4^2"}, {"2", "I2 K4 L4"},
    {"3", "J2 K4^2"},   {"-2", "J2 I4 J4"},  {"1", "J2^2 I6"},  {"-2", "I2^2 M6"},
    {"-12", "K4 J6"},   {"6", "L4 L6"},      {"6", "I4 M6"},    {"-3", "J4 K6"},
};

const Table kE16aTable = {
    {"2", "I2^3 J2^3 J4"},     {"-4", "I2 J2^3 I4 J4"},    {"-6", "J2^3 J4 I6"},
    {"-9", "I2^2 J2^2 J4^2"},  {"18", "J2^2 I4 J4^2"},     {"9", "J4^4"},
    {"36", "I2 J2 J6^2"},      {"-54", "J4 J6^2"},         {"-48", "I2 J2^2 K4 J6"},
    {"144", "J2 J4 K4 J6"},    {"12", "I2 J2^3 K4^2"},     {"-36", "J2^2 J4 K4^2"},
    {"-24", "I2^2 J2 L4 J6"},  {"36", "I2 J4 L4 J6"},      {"12", "I2^2 J2^2 K4 L4"},
    {"-18", "I2 J2 J4 K4 L4"}, {"-18", "J4^2 K4 L4"},      {"6", "I2^3 J2 L4^2"},
    {"-6", "I2 J2 I4 L4^2"},   {"-9", "I2^2 J4 L4^2"},     {"9", "I4 J4 L4^2"},
    {"-36", "J2 J4 L4 L6"},    {"-6", "I2^3 J2^2 M6"},     {"12", "I2 J2^2 I4 M6"},
    {"9", "J2^2 I6 M6"},       {"36", "I2^2 J2 J4 M6"},    {"-72", "J2 I4 J4 M6"},
    {"-18", "I2 J4^2 M6"},     {"-108", "K4 J6 M6"},       {"27", "J2 K4^2 M6"},
    {"18", "I2 K4 L4 M6"},     {"54", "L4 L6 M6"},         {"-18", "I2^2 M6^2"},
    {"54", "I4 M6^2"},
};

const Table kE16bTable = {
    {"4/9", "I2^3 J2^3 K4"},    {"2/9", "I2^4 J2^2 L4"},     {"4/3", "I2^3 J2 J4 L4"},
    {"-8/9", "I2 J2^3 I4 K4"},  {"-4/9", "I2^2 J2^2 I4 L4"}, {"-4/3", "I2^2 J2^2 J4 K4"},
    {"-2", "I2^2 J4^2 L4"},     {"2", "I2^2 K4 L4^2"},       {"2", "J2^2 K4^3"},
    {"4", "I2 J2 J4^2 K4"},     {"5", "I2 J2 K4^2 L4"},      {"-4", "I2 J2 I4 J4 L4"},
    {"-4/3", "I2^3 J2^2 J6"},   {"2/3", "J2^3 K4 I6"},       {"1/3", "I2 J2^2 L4 I6"},
    {"8/3", "I2 J2^2 I4 J6"},   {"4/3", "I2^2 J2 J4 J6"},    {"-2", "I2^3 L4 M6"},
    {"1", "J2 J4 L4 I6"},       {"-16", "I2 K4 L4 J6"},      {"-14", "J2 K4^2 J6"},
    {"6", "I2 L4^2 L6"},        {"4", "J2 K4 L4 L6"},        {"6", "I2 I4 L4 M6"},
    {"-2", "I2 J4 K4 M6"},      {"4", "J2 I4 K4 M6"},        {"4", "I2^2 J6 M6"},
    {"-2", "J2^2 I6 J6"},       {"-4", "I2 J2 L6 M6"},       {"-12", "I4 J6 M6"},
    {"6", "J4 L6 M6"},          {"24", "K4 J6^2"},           {"-12", "L4 J6 L6"},
    {"-4", "J4^3 K4"},          {"4", "I4 J4^2 L4"},         {"-1", "J4 K4^2 L4"},
};

const Table kE16cTable = {
    {"1/18", "I2^5 J2^3"},        {"-2/9", "I2^3 J2^3 I4"},   {"2/9", "I2 J2^3 I4^2"},
    {"1/12", "I2^2 J2^3 I6"},     {"-1/6", "J2^3 I4 I6"},     {"-1/6", "I2^4 J2^2 J4"},
    {"1/3", "I2^2 J2^2 I4 J4"},   {"1/2", "I2 J2^2 J4 I6"},   {"1/2", "I2^3 J2 J4^2"},
    {"-1", "I2 J2 I4 J4^2"},      {"-3/4", "J2 J4^2 I6"},     {"-1/2", "I2^2 J4^3"},
    {"1", "I4 J4^3"},             {"-1", "I2^2 J2 K4 J6"},    {"2", "J2 I4 K4 J6"},
    {"1/4", "I2^2 J2^2 K4^2"},    {"-1/2", "J2^2 I4 K4^2"},   {"3/2", "I2 J2 J4 K4^2"},
    {"-9/4", "J4^2 K4^2"},        {"1/2", "I2^3 J2 K4 L4"},   {"-1", "I2 J2 I4 K4 L4"},
    {"-1/2", "I2^2 J4 K4 L4"},    {"1", "I4 J4 K4 L4"},       {"2", "I2 J2 J6 L6"},
    {"-3", "J4 J6 L6"},           {"-2", "I2 J2^2 K4 L6"},    {"3", "J2 J4 K4 L6"},
    {"-1/2", "I2^2 J2 L4 L6"},    {"-1", "J2 I4 L4 L6"},      {"3/2", "I2 J4 L4 L6"},
    {"-1/6", "I2^4 J2 M6"},       {"5/6", "I2^2 J2 I4 M6"},   {"-1", "J2 I4^2 M6"},
    {"-1", "I2 J2 I6 M6"},        {"3/2", "J4 I6 M6"},
};

}  // namespace

const SyzygyRelation& relation_i8() {
  static const SyzygyRelation r = relation_from_table("I8-elimination", Basis::Thirteen, kI8Table);
  return r;
}

const SyzygyRelation& relation_k6() {
  static const SyzygyRelation r = relation_from_table("K6-elimination", Basis::Thirteen, kK6Table);
  return r;
}

const SyzygyRelation& relation_e16a() {
  static const SyzygyRelation r = relation_from_table("degree16-a", Basis::Eleven, kE16aTable);
  return r;
}

const SyzygyRelation& relation_e16b() {
  static const SyzygyRelation r = relation_from_table("degree16-b", Basis::Eleven, kE16bTable);
  return r;
}

const SyzygyRelation& relation_e16c() {
  static const SyzygyRelation r = relation_from_table("degree16-c", Basis::Eleven, kE16cTable);
  return r;
}

const std::vector<SyzygyRelation>& builtin_relations() {
  static const std::vector<SyzygyRelation> all{relation_i8(), relation_k6(), relation_e16a(),
                                               relation_e16b(), relation_e16c()};
  return all;
}

}  // namespace sym3

#include "gastro/io.hpp"

#include "gastro/errors.hpp"

#include <cstdio>
#include <fstream>
#include <map>

namespace gastro {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  return out;
}

}  // namespace

std::string format_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_trace_csv(const std::string& path, const SimulationTrace& trace) {
  auto out = open_out(path);
  out << "time_h,Gtn_A,Gtn_C,S_A,S_C,H_C,A_C,A_A,B_C,B_A,N_C,N_E,PP_n,Fd,PPI\n";
  for (const auto& s : trace.samples) {
    const auto& x = s.state;
    out << format_num(s.time_h) << ',' << format_num(x.gtn_a) << ',' << format_num(x.gtn_c)
        << ',' << format_num(x.s_a) << ',' << format_num(x.s_c) << ',' << format_num(x.h_c)
        << ',' << format_num(x.a_c) << ',' << format_num(x.a_a) << ',' << format_num(x.b_c)
        << ',' << format_num(x.b_a) << ',' << format_num(x.n_c) << ',' << format_num(x.n_e)
        << ',' << format_num(x.pp_n) << ',' << format_num(s.food) << ',' << format_num(s.ppi)
        << '\n';
  }
}

void write_schedule_csv(const std::string& path, const DoseSchedule& schedule) {
  auto out = open_out(path);
  out << "day,slot,time_h,dose_mg\n";
  for (const auto& ev : schedule.events()) {
    out << ev.day << ',' << ev.slot << ',' << format_num(ev.time_h) << ','
        << format_num(ev.amount_mg) << '\n';
  }
}

void write_optlog_csv(const std::string& path, const std::vector<DoseDecision>& decisions) {
  auto out = open_out(path);
  out << "dose_time_h,dose_mg,iterations,feasible,peak_AC_horizon_M\n";
  for (const auto& d : decisions) {
    out << format_num(d.time_h) << ',' << format_num(d.dose_mg) << ',' << d.iterations << ','
        << (d.feasible ? 1 : 0) << ',' << format_num(d.peak_acid_horizon) << '\n';
  }
}

void write_dose_table_csv(const std::string& path, const DoseSchedule& schedule, int days) {
  std::map<int, std::pair<double, double>> table;
  for (int d = 1; d <= days; ++d) table[d] = {0.0, 0.0};
  for (const auto& ev : schedule.events()) {
    auto& row = table[ev.day];
    if (ev.slot == 1) row.first += ev.amount_mg;
    else row.second += ev.amount_mg;
  }
  auto out = open_out(path);
  out << "day,slot1_mg,slot2_mg,day_total_mg\n";
  for (const auto& [day, row] : table) {
    out << day << ',' << format_num(row.first) << ',' << format_num(row.second) << ','
        << format_num(row.first + row.second) << '\n';
  }
}

}  // namespace gastro

#pragma once

#include "gastro/integrate.hpp"
#include "gastro/pk.hpp"
#include "gastro/scheduler.hpp"

#include <string>
#include <vector>

namespace gastro {

/// Deterministic shortest-round-trip style formatting ("%.12g").
std::string format_num(double v);

/// Columns: time_h,Gtn_A,Gtn_C,S_A,S_C,H_C,A_C,A_A,B_C,B_A,N_C,N_E,PP_n,Fd,PPI
void write_trace_csv(const std::string& path, const SimulationTrace& trace);

/// Columns: day,slot,time_h,dose_mg
void write_schedule_csv(const std::string& path, const DoseSchedule& schedule);

/// Columns: dose_time_h,dose_mg,iterations,feasible,peak_AC_horizon_M
void write_optlog_csv(const std::string& path, const std::vector<DoseDecision>& decisions);

/// Day-by-day dose table. Columns: day,slot1_mg,slot2_mg,day_total_mg
void write_dose_table_csv(const std::string& path, const DoseSchedule& schedule, int days);

}  // namespace gastro

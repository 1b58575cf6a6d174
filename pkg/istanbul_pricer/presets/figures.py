import numpy as np

RATE = 0.05
VOL = 0.3

FIG1_RATES = np.round(np.linspace(0.01, 0.08, 15), 3)
FIG1_VOLS = np.round(np.linspace(0.10, 0.50, 81), 3)

FIG2_MATURITY = 1.0
# left panel: spot varies
FIG2_SPOTS = np.arange(70, 101)
FIG2_LEFT_BARRIER = 105
FIG2_LEFT_STRIKE = 90
# right panel: strike varies
FIG2_STRIKES = np.arange(70, 101)
FIG2_RIGHT_BARRIER = 85
FIG2_RIGHT_SPOT = 79

FIG3_BARRIER = 85
# left panel: spot varies per volatility
FIG3_SPOTS = np.arange(60, 85)
FIG3_VOLS = (0.2, 0.3, 0.4)
FIG3_LEFT_MATURITY = 1.0
FIG3_LEFT_STRIKE = 80
# right panel: strike varies per maturity
FIG3_STRIKES = np.arange(60, 101)
FIG3_MATURITIES = (0.5, 1.0, 1.5)
FIG3_RIGHT_SPOT = 80

"""Kirillov-Reshetikhin paths, energy statistics and box-ball dynamics."""

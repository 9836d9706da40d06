"""Second ideal intersection graph toolkit"""
